// Umbrella header.

#ifndef HJD_HJD_HPP
#define HJD_HJD_HPP

#include "hjd/error.hpp"
#include "hjd/scalar.hpp"
#include "hjd/linear.hpp"
#include "hjd/tensor.hpp"
#include "hjd/algebra.hpp"
#include "hjd/expr.hpp"
#include "hjd/suites.hpp"
#include "hjd/check.hpp"
#include "hjd/operators.hpp"
#include "hjd/constructions.hpp"
#include "hjd/io.hpp"

#endif  // HJD_HJD_HPP
