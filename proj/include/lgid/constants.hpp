#pragma once

#include "lgid/value.hpp"

namespace lgid {

struct Constants {
    ValueWithError euler_gamma;
    ValueWithError log_glaisher;
    ValueWithError catalan;
    ValueWithError zeta3;
    ValueWithError zeta_prime_2;
    ValueWithError zeta_dprime_2;
    ValueWithError log_two_pi;
    // zeta'(-1), kept because log A is derived from it
    ValueWithError zeta_prime_m1;
};

// Computed on first use; later calls return the same object.
const Constants& constants();

namespace num {
inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double two_pi = 6.283185307179586476925286766559005768;
inline constexpr double half_pi = 1.570796326794896619231321691639751442;
inline constexpr double ln2 = 0.6931471805599453094172321214581765681;
inline constexpr double zeta2 = 1.644934066848226436472415166646025189;
}  // namespace num

}  // namespace lgid
