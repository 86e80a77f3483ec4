#ifndef LAPINV_MPNUM_HPP
#define LAPINV_MPNUM_HPP

#include "lapinv/mpnum/big_complex.hpp"
#include "lapinv/mpnum/big_real.hpp"
#include "lapinv/mpnum/exact_real.hpp"
#include "lapinv/mpnum/special.hpp"

#endif  // LAPINV_MPNUM_HPP
