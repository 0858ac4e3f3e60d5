// A short tour of the library: build a distribution from its primitive, take
// integrals and norms, convolve it with kernels and mollify it.

#include <cmath>
#include <cstdio>

#include "cpint/convolution.hpp"
#include "cpint/harness/random.hpp"

int main() {
    using namespace cpint;

    // f has primitive F_tent: 0 / x / 2 - x / 0 with knots at 0, 1, 2.
    const auto f = make_distribution(
        PiecewisePolynomial({0.0, 1.0, 2.0}, {Polynomial({0.0, 1.0}), Polynomial({1.0, -1.0})}, 0.0, 0.0));
    std::printf("integral over [0, 1]       = %g\n", integral(f, ExtendedReal(0.0), ExtendedReal(1.0)));
    std::printf("integral over the line     = %g\n", integral(f));
    std::printf("Alexiewicz norm            = %g\n", alexiewicz_norm(f));
    std::printf("sup |F|                    = %g\n", alexiewicz_norm_prime(f));

    // Convolution with the Heaviside step recovers the primitive.
    const auto h = convolve_bv(f, BVFunction::open_step());
    std::printf("(f * step)(0.5)            = %g (F(0.5) = %g)\n", h(0.5), f.primitive()(0.5));

    // Convolution with an integrable kernel gives another distribution.
    const auto box = harness::unit_box();
    const auto fb = convolve_l1(f, box);
    std::printf("integral of f * box        = %g\n", integral(fb));

    // Mollification converges in the Alexiewicz norm.
    const auto kernel = harness::quadratic_bspline_kernel();
    for (int k = 0; k <= 6; k += 2) {
        const double t = std::ldexp(1.0, -k);
        std::printf("||f * g_t - f||, t = %-7g = %.3e\n", t, alexiewicz_norm(mollify(f, kernel, t) - f));
    }

    // Stieltjes pairing with a function of bounded variation.
    std::printf("integral of f times step   = %g\n", integrate_product(f, BVFunction::open_step()));
    return 0;
}
