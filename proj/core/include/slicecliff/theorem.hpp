#pragma once

// Randomized and exhaustive checks of the kernel characterization
// ker F_k = { slice polynomials of degree <= 2k } for k < gamma_m, the
// even-power solution basis of the associated ODE, and the reconstruction
// of an entire stem from the odd part of its imaginary component.

#include "slicecliff/operators.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace slicecliff {

/// F_k P == 0, computed on the stem with the Half convention.
bool kernel_test(const SlicePoly& p, int k);

/// Coefficient entries p/q with p in [-5, 5], q in [1, 5]. Every blade is
/// populated for m <= 5; for larger m only blades of grade <= 2. The
/// leading coefficient is resampled until nonzero.
SlicePoly random_slice_poly(AlgebraSignature sig, int degree, std::mt19937_64& rng);

/// One random coefficient with the distribution described above.
Multivector random_coefficient(AlgebraSignature sig, std::mt19937_64& rng);

/// Per-(degree, trial) generator, independent of evaluation order.
std::mt19937_64 trial_rng(std::uint64_t seed, int degree, int trial);

struct KernelReport {
    int m = 0;
    int k = 0;
    int deg_max = 0;
    int trials = 0;  ///< per degree
    int low_degree_trials = 0;
    int high_degree_trials = 0;
    int in_kernel_low_degree = 0;
    int out_of_kernel_high_degree = 0;
    std::vector<SlicePoly> counterexamples;
    double elapsed_ms = 0;

    bool ok() const noexcept { return counterexamples.empty(); }
};

/// For each degree 0..deg_max draws `trials` polynomials and checks that
/// membership in ker F_k holds exactly for degree <= 2k. Throws
/// std::invalid_argument unless k < gamma_m and deg_max > 2k.
KernelReport verify_main_theorem(int m, int k, int deg_max, int trials, std::uint64_t seed);

struct OdeResidual {
    BigInt coefficient;
    int beta_exponent = 0;

    friend bool operator==(const OdeResidual&, const OdeResidual&) = default;
};

/// Substitutes y = x^{2h} into sum_l a_l^(k) x^{l-1} y^(l) and returns the
/// single resulting monomial.
OdeResidual ode_residual(int k, int h);

/// Univariate polynomial in alpha; entry i multiplies alpha^i.
using AlphaPoly = std::vector<Multivector>;

/// Odd part of an entire stem, v = sum_{l<k} c_l(alpha) beta^{2l+1}, plus
/// the free constant s_{-1}.
struct ReconstructionInput {
    AlgebraSignature sig{3};
    int k = 0;
    std::vector<AlphaPoly> c;
    Multivector s_minus1;
};

/// c_l'' = -(2l+2)(2l+3) c_{l+1} for l <= k-2 and c_{k-1}'' = 0.
bool harmonicity_check(const ReconstructionInput& r);

/// Reads s_0..s_{2k-1} off c_0, checks c_1..c_{k-1} against them and returns
/// sum_{l=0}^{2k} (2k+1)!/l! s_{l-1} x^l. Throws std::invalid_argument when
/// the system is not harmonic, a degree bound fails or the c_l disagree.
SlicePoly reconstruct_entire(const ReconstructionInput& r);

/// c_l = coefficient of beta^{2l} in f'_s. Throws std::invalid_argument if
/// f'_s has beta-degree above 2k-2.
ReconstructionInput extract_reconstruction_input(const SlicePoly& p, int k);

}  // namespace slicecliff
