#pragma once

#include <cmath>

// Reference values computed independently of the library (plain bisection and
// closed forms evaluated at extended precision), used as test oracles.
namespace testref {

// Root of x tanh x = 1 by 200 bisection steps; deliberately avoids the
// library's bracketing and Brent code paths.
inline double alpha_bisect() {
  double lo = 1.0, hi = 1.5;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (mid * std::tanh(mid) - 1.0 < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kAlpha = 1.19967864025773383392;
inline constexpr double kTwoOverAlpha = 1.66711311920192939687;
inline constexpr double kCoshSqAlpha = 3.27671753122807259731;
inline constexpr double kFourPi = 12.5663706143591729539;
inline constexpr double kFourPiCoshSq1 = 29.9217579961306100415;   // 4 pi cosh^2(1)
inline constexpr double kSlabVolume1G2 = 35.3546066401349238616;   // 4 pi (1 + sinh1 cosh1)
inline constexpr double kSlabVolumeAlphaG2 = 49.3985038228140559569;
inline constexpr double kSlabBoundaryAlphaG2 = 82.3528937919599742667;
inline constexpr double kSlabQuotient1 = 1.69266530388507355046;   // cosh^2(1)/I(1)
inline constexpr double kTwoTanh1 = 1.52318831191152977624;
inline constexpr double kThreeSinh07 = 2.27575110551860051038;
inline constexpr double kCoshIntegral1 = 1.40671510196175469192;   // (1 + sinh1 cosh1)/2
inline constexpr double kRicTangentialSphere1 = -1.16005131677194786;  // -2 tanh^2(1)
inline constexpr double kScalarPlus6Sphere1 = 1.67989736645610428;    // 4 sech^2(1)
inline constexpr double kBlowup5 = 88097.8638450485339;
inline constexpr double kBlowup10 = 1940660773.63916114;
inline constexpr double kBlowup15 = 42745898326089.8486;
inline constexpr double kCoreBoundExample = 0.411764468959799871333;  // 4pi cosh^2(a)/100
inline constexpr double kRayleighSech12 = 0.916666666672958557574;    // 1 - tanh(12)/12
inline constexpr double kRatioCore5T10Deficit = 1.69769371676988908e-7;
inline constexpr double kRatioCore100T1 = 0.254269575797018327909;
inline constexpr double kProfileBoundTg1Out15 = 1.63252705789797686695;
inline constexpr double kProfileTTg1Out15 = 1.14551707762200124350;

inline double lambda0_exact(double L) { return 1.0 + kPi * kPi / (4.0 * L * L); }

}  // namespace testref
