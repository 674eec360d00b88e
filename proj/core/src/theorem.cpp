#include "slicecliff/theorem.hpp"

#include <chrono>
#include <stdexcept>
#include <string>

namespace slicecliff {

namespace {

AlphaPoly second_derivative(const AlphaPoly& p)
{
    AlphaPoly out;
    for (std::size_t i = 2; i < p.size(); ++i)
        out.push_back(p[i] * Rational(static_cast<long>(i * (i - 1))));
    return out;
}

bool same_poly(const AlphaPoly& a, const AlphaPoly& b)
{
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        const Multivector zero;
        const Multivector& x = i < a.size() ? a[i] : zero;
        const Multivector& y = i < b.size() ? b[i] : zero;
        if (!(x == y))
            return false;
    }
    return true;
}

int degree_of(const AlphaPoly& p)
{
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (!p[static_cast<std::size_t>(i)].is_zero())
            return i;
    return -1;
}

Rational ratio_of_factorials(int num, int den)
{
    Rational q(factorial(static_cast<unsigned long>(num)), factorial(static_cast<unsigned long>(den)));
    q.canonicalize();
    return q;
}

}  // namespace

bool kernel_test(const SlicePoly& p, int k) { return frak_F(p, k, DiracConvention::Half).is_zero(); }

Multivector random_coefficient(AlgebraSignature sig, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 5);
    Multivector c;
    std::uint32_t blades = std::uint32_t{1} << sig.m();
    for (std::uint32_t bits = 0; bits < blades; ++bits) {
        BladeMask b{bits};
        if (sig.m() > 5 && b.grade() > 2)
            continue;
        Rational q(num(rng), den(rng));
        q.canonicalize();
        c.add_term(b, q);
    }
    return c;
}

SlicePoly random_slice_poly(AlgebraSignature sig, int degree, std::mt19937_64& rng)
{
    std::vector<Multivector> coefs;
    for (int n = 0; n <= degree; ++n)
        coefs.push_back(random_coefficient(sig, rng));
    while (coefs.back().is_zero())
        coefs.back() = random_coefficient(sig, rng);
    return SlicePoly(sig, std::move(coefs));
}

std::mt19937_64 trial_rng(std::uint64_t seed, int degree, int trial)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(degree), static_cast<std::uint32_t>(trial)};
    return std::mt19937_64(seq);
}

KernelReport verify_main_theorem(int m, int k, int deg_max, int trials, std::uint64_t seed)
{
    AlgebraSignature sig(m);
    if (k < 0 || k >= sig.sce_exponent())
        throw std::invalid_argument("k must satisfy 0 <= k < gamma_m = " + std::to_string(sig.sce_exponent()));
    if (deg_max <= 2 * k)
        throw std::invalid_argument("deg_max must exceed 2k = " + std::to_string(2 * k));
    if (trials < 1)
        throw std::invalid_argument("trials must be >= 1");

    auto start = std::chrono::steady_clock::now();
    KernelReport report;
    report.m = m;
    report.k = k;
    report.deg_max = deg_max;
    report.trials = trials;
    for (int d = 0; d <= deg_max; ++d) {
        bool low = d <= 2 * k;
        for (int t = 0; t < trials; ++t) {
            auto rng = trial_rng(seed, d, t);
            SlicePoly p = random_slice_poly(sig, d, rng);
            bool in_kernel = kernel_test(p, k);
            if (low) {
                ++report.low_degree_trials;
                report.in_kernel_low_degree += in_kernel ? 1 : 0;
            } else {
                ++report.high_degree_trials;
                report.out_of_kernel_high_degree += in_kernel ? 0 : 1;
            }
            if (in_kernel != low)
                report.counterexamples.push_back(std::move(p));
        }
    }
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

OdeResidual ode_residual(int k, int h)
{
    if (k < 1 || h < 0)
        throw std::invalid_argument("ode_residual needs k >= 1 and h >= 0");
    // d^l/dx^l x^{2h} = (2h)_l x^{2h-l}; every term lands on x^{2h-1}.
    Rational sum = 0;
    for (int l = 1; l <= k; ++l)
        sum += coeff_closed(k, l) * Rational(falling_factorial(2L * h, l));
    if (!is_integer(sum))
        throw std::logic_error("non-integral ODE residual " + to_string(sum));
    return {sum.get_num(), 2 * h - 1};
}

bool harmonicity_check(const ReconstructionInput& r)
{
    if (static_cast<int>(r.c.size()) != r.k)
        return false;
    for (int l = 0; l < r.k; ++l) {
        AlphaPoly lhs = second_derivative(r.c[static_cast<std::size_t>(l)]);
        AlphaPoly rhs;
        if (l + 1 < r.k) {
            Rational f(-(2 * l + 2) * (2 * l + 3));
            for (const auto& c : r.c[static_cast<std::size_t>(l + 1)])
                rhs.push_back(c * f);
        }
        if (!same_poly(lhs, rhs))
            return false;
    }
    return true;
}

SlicePoly reconstruct_entire(const ReconstructionInput& r)
{
    const int k = r.k;
    if (k < 0 || static_cast<int>(r.c.size()) != k)
        throw std::invalid_argument("reconstruction needs exactly k coefficient functions");
    for (int l = 0; l < k; ++l) {
        int bound = 2 * k - 2 * l - 1;
        if (degree_of(r.c[static_cast<std::size_t>(l)]) > bound)
            throw std::invalid_argument("c_" + std::to_string(l) + " exceeds degree " + std::to_string(bound));
    }
    if (!harmonicity_check(r))
        throw std::invalid_argument("coefficient functions violate the harmonicity system");

    // c_0(alpha) = (2k+1)! sum_{eta < 2k} alpha^eta / eta! s_eta.
    std::vector<Multivector> s(static_cast<std::size_t>(2 * k));
    for (int eta = 0; k > 0 && eta < 2 * k; ++eta) {
        const AlphaPoly& c0 = r.c[0];
        if (static_cast<std::size_t>(eta) < c0.size())
            s[static_cast<std::size_t>(eta)] =
                c0[static_cast<std::size_t>(eta)] * Rational(Rational(1) / ratio_of_factorials(2 * k + 1, eta));
    }
    // c_l(alpha) = (-1)^l (2k+1)!/(2l+1)! sum_{eta < 2k-2l} alpha^eta / eta! s_{eta+2l}.
    for (int l = 1; l < k; ++l) {
        AlphaPoly expected;
        Rational lead = ratio_of_factorials(2 * k + 1, 2 * l + 1);
        if (l % 2 != 0)
            lead = -lead;
        for (int eta = 0; eta < 2 * k - 2 * l; ++eta)
            expected.push_back(s[static_cast<std::size_t>(eta + 2 * l)] * (lead / Rational(factorial(eta))));
        if (!same_poly(expected, r.c[static_cast<std::size_t>(l)]))
            throw std::invalid_argument("c_" + std::to_string(l) + " is inconsistent with c_0");
    }

    std::vector<Multivector> coefs(static_cast<std::size_t>(2 * k + 1));
    coefs[0] = r.s_minus1 * Rational(factorial(static_cast<unsigned long>(2 * k + 1)));
    for (int l = 1; l <= 2 * k; ++l)
        coefs[static_cast<std::size_t>(l)] = s[static_cast<std::size_t>(l - 1)] * ratio_of_factorials(2 * k + 1, l);
    return SlicePoly(r.sig, std::move(coefs));
}

ReconstructionInput extract_reconstruction_input(const SlicePoly& p, int k)
{
    if (k < 0)
        throw std::invalid_argument("k must be >= 0");
    BiPoly fs = spherical_derivative(stem_components(p));
    if (fs.beta_degree() > 2 * k - 2)
        throw std::invalid_argument("spherical derivative has beta-degree " + std::to_string(fs.beta_degree()) +
                                    " > 2k-2");
    ReconstructionInput r{p.signature(), k, std::vector<AlphaPoly>(static_cast<std::size_t>(k)), Multivector()};
    for (const auto& [key, c] : fs.terms()) {
        AlphaPoly& cl = r.c[static_cast<std::size_t>(key.second / 2)];
        if (cl.size() <= static_cast<std::size_t>(key.first))
            cl.resize(static_cast<std::size_t>(key.first) + 1);
        cl[static_cast<std::size_t>(key.first)] += c;
    }
    return r;
}

}  // namespace slicecliff
