#include "pvi/gamma.hpp"

namespace pvi {

namespace {

// Lanczos coefficients, N=13, g = 6.024680040776729583740234375.
// Rational form P(z)/Q(z) with Q(z) = z(z+1)...(z+11); the sqrt(2 pi) is
// absorbed into P.
constexpr double lanczos_g = 6.024680040776729583740234375;
constexpr double lanczos_num[13] = {
    23531376880.410759688572007674451636754734846804940,
    42919803642.649098768957899047001988850926355848959,
    35711959237.355668049440185451547166705960488635843,
    17921034426.037209699919755754458931112671403265390,
    6039542586.3520280050642916443603408145143884968720,
    1439720407.3117216736632230727949123939715485786772,
    248874557.86205415651146038641322942321632125127801,
    31426415.585400194380614231628318205362874684987640,
    2876370.6289353724412254090516208496135991145378768,
    186056.26539522349504029498971604569928220784236328,
    8071.6720023658162106380029022722506138218516325024,
    210.82427775157934587250973392071336271166969580291,
    2.5066282746310002701649081771338373386264310793408,
};

cplx lanczos_sum(cplx z) {
    // P(z)/Q(z): P by Horner (descending powers), Q as the rising product.
    cplx p = lanczos_num[12];
    for (int k = 11; k >= 0; --k) p = p * z + lanczos_num[k];
    cplx q{1.0, 0.0};
    for (int k = 0; k < 12; ++k) q *= (z + cplx(double(k), 0.0));
    return p / q;
}

cplx gamma_right(cplx z) {
    // Re z >= 0.5
    cplx zgh = z + cplx(lanczos_g - 0.5, 0.0);
    return lanczos_sum(z) * std::exp((z - cplx(0.5, 0.0)) * std::log(zgh) - zgh);
}

} // namespace

cplx gamma(cplx z) {
    if (is_near_nonpositive_integer(z, 1e-12))
        throw PoleError("gamma: pole at non-positive integer");
    if (z.real() >= 0.5) return gamma_right(z);
    // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return PI / (std::sin(PI * z) * gamma_right(cplx(1.0, 0.0) - z));
}

cplx rgamma(cplx z) {
    if (z.real() >= 0.5) return cplx(1.0, 0.0) / gamma_right(z);
    // 1/Gamma(z) = sin(pi z) Gamma(1-z) / pi; exact zero at exact integers
    return std::sin(PI * z) * gamma_right(cplx(1.0, 0.0) - z) / PI;
}

cplx pochhammer(cplx a, int n) {
    cplx r{1.0, 0.0};
    for (int k = 0; k < n; ++k) r *= (a + cplx(double(k), 0.0));
    return r;
}

} // namespace pvi
