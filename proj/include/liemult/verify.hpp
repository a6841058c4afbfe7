#ifndef LIEMULT_VERIFY_HPP
#define LIEMULT_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "liemult/config.hpp"

namespace liemult {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Deterministic splitmix64 stream; identical across platforms, so seeded
/// suites reproduce exactly.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
    /// Inclusive range.
    int range(int lo, int hi) {
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

  private:
    std::uint64_t state_;
};

Scalar random_scalar(Rng& rng, const FieldSpec& fs, bool nonzero = false);
NCPoly random_ncpoly(Rng& rng, const AlphabetPtr& alphabet, const FieldSpec& fs,
                     int max_degree, int max_terms, bool zero_constant = false);
UQElement random_uq(Rng& rng, const PresentationPtr& pres, int max_degree,
                    int max_terms, bool zero_constant = false);
TensorElement random_tensor(Rng& rng, const PresentationPtr& pres, int arity,
                            int max_degree, int max_terms);
/// Random element of the ideal, assembled from adjoint actions of alpha.
NCPoly random_ideal_element(Rng& rng, const WitnessSpec& w, int action_degree);

// ---- per-module property suites --------------------------------------

CheckResult check_scalar_axioms(const FieldSpec& fs, Rng& rng, int samples);
CheckResult check_int_embedding(const FieldSpec& fs);
CheckResult check_freealg_laws(const AlphabetPtr& alphabet, const FieldSpec& fs,
                               Rng& rng, int samples);
CheckResult check_freelie_laws(const AlphabetPtr& alphabet, const FieldSpec& fs,
                               Rng& rng, int samples);
CheckResult check_straightening(const PresentationPtr& pres, Rng& rng,
                                int samples);
CheckResult check_projection_hom(const PresentationPtr& pres, Rng& rng,
                                 int samples);
CheckResult check_hopf_axioms(const PresentationPtr& pres, Rng& rng,
                              int samples);
CheckResult check_collapse_kill(const PresentationPtr& pres, Rng& rng,
                                int samples, int arity_lo, int arity_hi);
CheckResult check_magnus_laws(const WitnessSpec& w, Rng& rng, int samples);

/// tensor_expand vs cartan_weyl on two independent symbols, built on an
/// internal instance over Q.
CheckResult check_cartan_weyl_symbolic(int n);
CheckResult check_cartan_weyl_instance(const WitnessSpec& w, Rng& rng,
                                       int n_lo, int n_hi);
CheckResult check_pipeline_consistency(const WitnessSpec& w, Rng& rng,
                                       int samples, int n_lo, int n_hi);
CheckResult check_eps_slot_identity(const PresentationPtr& pres, Rng& rng,
                                    int samples, int n_lo, int n_hi);
CheckResult check_closed_f_linearity(const PresentationPtr& pres, Rng& rng,
                                     int samples);
CheckResult check_case1_soundness(const PresentationPtr& pres, Rng& rng, int n,
                                  int samples);
/// Collapsed images of random bracket trees with leaves in the ideal, under
/// every slot choice; all must vanish (char 2, commutative quotient).
CheckResult check_final_remark_zero_images(const WitnessSpec& w, Rng& rng,
                                           int count);

/// The full suite for one instance, as run by the verify command.
std::vector<CheckResult> verify_instance(const Instance& inst, Rng& rng);

} // namespace liemult

#endif
