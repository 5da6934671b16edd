#pragma once

#include <superweyl/rational.hpp>
#include <superweyl/linear_combination.hpp>
#include <superweyl/multiset.hpp>
#include <superweyl/coeff_algebra.hpp>
#include <superweyl/sl21.hpp>
#include <superweyl/pbw.hpp>
#include <superweyl/weyl_ops.hpp>
#include <superweyl/linalg.hpp>
#include <superweyl/tensor_rep.hpp>
#include <superweyl/coproduct.hpp>
#include <superweyl/io.hpp>
#include <superweyl/expr_parser.hpp>
#include <superweyl/verifier.hpp>
