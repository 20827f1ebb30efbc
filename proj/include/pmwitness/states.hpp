#pragma once

// Initial atom + pseudo-mode states that all share the one-qubit marginal
// diag(alpha^2, 1 - alpha^2) but differ in how the qubit is correlated with
// the reservoir. Environment kets |n>_E are the pseudo-mode Fock states.

#include <string_view>

#include "pmwitness/core.hpp"
#include "pmwitness/model.hpp"

namespace pmw {

enum class PreparationKind {
  Uncorrelated,       // "a"
  Classical,          // "b"
  QuantumDiscordant,  // "c"
  Entangled,          // "d"
};

/// Single-letter CLI name ("a".."d").
char to_letter(PreparationKind kind);
PreparationKind preparation_from_letter(std::string_view letter);

inline constexpr PreparationKind kAllPreparations[] = {
    PreparationKind::Uncorrelated, PreparationKind::Classical,
    PreparationKind::QuantumDiscordant, PreparationKind::Entangled};

struct Preparation {
  PreparationKind kind = PreparationKind::Uncorrelated;
  double alpha2 = 0.5;  // population of |g>, strictly inside (0, 1)

  void validate() const;
};

enum class CorrelationClass { None, ClassicalOnly, DiscordNoEntanglement, Entangled };

const char* to_string(CorrelationClass c);

/// diag(alpha^2, 1 - alpha^2) in the {|g>, |e>} basis, for any kind.
DensityMatrix system_marginal(const Preparation& prep);

/// The qubit-reservoir state on model_layout(p). With two atoms the probe
/// is atom1, prepared in |g>, and the system qubit is atom2.
DensityMatrix initial_state(const Preparation& prep, const ModelParams& p);

CorrelationClass state_correlation_class(const Preparation& prep);

}  // namespace pmw
