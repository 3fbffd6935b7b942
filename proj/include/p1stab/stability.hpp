#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "p1stab/kclass.hpp"
#include "p1stab/objects.hpp"

namespace p1stab {

enum class Regime { geometric, wall, quiver };

std::string to_string(Regime r);

/// A point of the stability manifold of D(P^1), parameterized by a base
/// twist i together with the lifted phases and log-masses of the pair
/// O(i), O(i-1)[1].  Every choice with alpha > beta - 1 determines a
/// unique stability condition; the boundary alpha = beta - 1 is excluded.
///
/// Regimes: alpha < beta is geometric (all line bundles and torsion
/// sheaves semistable), alpha > beta is the quiver chamber (only O(i-1)
/// and O(i) survive up to shift), and |alpha - beta| <= phase_epsilon()
/// is the wall between them.
class StabilityCondition {
  public:
    StabilityCondition(std::int64_t base_twist, double alpha, double beta, double log_m_alpha,
                       double log_m_beta);

    std::int64_t base_twist() const { return base_twist_; }
    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double log_m_alpha() const { return log_m_alpha_; }
    double log_m_beta() const { return log_m_beta_; }
    Regime regime() const { return regime_; }

  private:
    std::int64_t base_twist_;
    double alpha_;
    double beta_;
    double log_m_alpha_;
    double log_m_beta_;
    Regime regime_;
};

StabilityCondition make_condition(std::int64_t base_twist, double alpha, double beta,
                                  double log_m_alpha, double log_m_beta);

/// Central charge Z(r, d) = r Z(O) + d Z(O_x), extended additively from
/// Z(O(i)) = exp(log_m_alpha + i pi alpha) and
/// Z(O(i-1)[1]) = exp(log_m_beta + i pi beta);
/// Z(O_x) = Z(O(i)) + Z(O(i-1)[1]).
std::complex<double> central_charge(const StabilityCondition& sc, const KClass& c);

/// Lifted phase psi of the skyscraper ray, in [alpha, beta].  Throws in
/// the quiver regime where no torsion sheaf is semistable.
double torsion_phase(const StabilityCondition& sc);

/// Lifted phase of a semistable indecomposable; nullopt if it is not
/// semistable under sc.
std::optional<double> semistable_phase(const StabilityCondition& sc, const Indecomposable& ind);

/// As semistable_phase but throws std::domain_error when not semistable.
double phase_of(const StabilityCondition& sc, const Indecomposable& ind);

/// True iff every summand is semistable and all phases agree within
/// phase_epsilon().  Throws on the zero object.
bool is_semistable(const StabilityCondition& sc, const DecomposedObject& obj);

struct HNPiece {
    double phase = 0.0;
    DecomposedObject piece;
    std::complex<double> charge;
};

/// Harder-Narasimhan filtration: semistable pieces of strictly decreasing
/// phase whose signed classes sum to the class of the input.
using HNFiltration = std::vector<HNPiece>;

HNFiltration hn(const StabilityCondition& sc, const DecomposedObject& obj);

/// Sum of |Z| over the HN pieces; >= |Z(obj)| by the triangle inequality.
double mass(const StabilityCondition& sc, const DecomposedObject& obj);

/// Heart P((r-1, r]) descriptors: a shift of the standard heart, a
/// two-bundle extension-closed pair <O(i-1)[p+j], O(i)[j]>, or the exotic
/// hearts built from skyscrapers which carry no slope function.
struct CohShift {
    std::int64_t j = 0;
    friend bool operator==(const CohShift&, const CohShift&) = default;
};

struct HeartPair {
    std::int64_t p = 1;  // >= 1
    std::int64_t i = 0;
    std::int64_t j = 0;
    friend bool operator==(const HeartPair&, const HeartPair&) = default;
};

struct ExoticHeart {
    std::vector<std::string> points;
    friend bool operator==(const ExoticHeart&, const ExoticHeart&) = default;
};

using HeartDescriptor = std::variant<CohShift, HeartPair, ExoticHeart>;

std::string to_string(const HeartDescriptor& h);

HeartDescriptor heart_at(const StabilityCondition& sc, double r);

/// True for CohShift and HeartPair; false for ExoticHeart.
bool admits_slope_function(const HeartDescriptor& h);

}  // namespace p1stab
