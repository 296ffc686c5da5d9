#pragma once

#include "leibniz/errors.hpp"
#include "leibniz/exactnum.hpp"
#include "leibniz/algebra.hpp"
#include "leibniz/linear_map.hpp"
#include "leibniz/families.hpp"
#include "leibniz/morphisms.hpp"
#include "leibniz/poly.hpp"
#include "leibniz/necessity.hpp"
#include "leibniz/json_io.hpp"
