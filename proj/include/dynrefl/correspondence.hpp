#pragma once

#include <string>
#include <variant>
#include <vector>

#include "dynrefl/module.hpp"

namespace dynrefl {

/// One endomorphism of G per element of X.
struct HomFamily {
  std::vector<GroupEndomorphism> maps;
  bool operator==(const HomFamily&) const = default;
};

/// Dense table over (λ, x, a).
struct ParamTable {
  std::size_t n = 0, nx = 0;
  std::vector<Index> v;
  Index operator()(Index l, Index x, Index a) const { return v[(l * nx + x) * n + a]; }
  Index& at(Index l, Index x, Index a) { return v[(l * nx + x) * n + a]; }
  bool operator==(const ParamTable&) const = default;
};
struct PiTable : ParamTable {};
struct BetaTable : ParamTable {};

/// a □^λ_x b over (λ, x, a, b).
struct BracketTable {
  std::size_t n = 0, nx = 0;
  std::vector<Index> v;
  Index operator()(Index l, Index x, Index a, Index b) const {
    return v[((l * nx + x) * n + a) * n + b];
  }
  Index& at(Index l, Index x, Index a, Index b) { return v[((l * nx + x) * n + a) * n + b]; }
  bool operator==(const BracketTable&) const = default;
};

struct ThetaAction { SetHMorphism theta; };  // (L⊗L)⊗Y → Y
struct ModuleAction { SetHMorphism mY; };    // L⊗Y → Y

using Layer = std::variant<HomFamily, PiTable, BetaTable, BracketTable, ThetaAction,
                           ModuleAction>;
std::string layer_name(const Layer& l);

enum class Direction { TowardAction, TowardFamily };

// Axiom sets, one per layer.
std::vector<Identity> family_identities(const ModuleSetting& S, const HomFamily& F);
std::vector<Identity> pi_identities(const ModuleSetting& S, const PiTable& P);
std::vector<Identity> beta_identities(const ModuleSetting& S, const BetaTable& B);
std::vector<Identity> bracket_identities(const ModuleSetting& S, const BracketTable& T);
std::vector<Identity> layer_identities(const ModuleSetting& S, const Layer& l);

// Raw conversions; they assume the input satisfies its axioms.
PiTable pi_from_family(const ModuleSetting& S, const HomFamily& F);
HomFamily family_from_pi(const ModuleSetting& S, const PiTable& P);
BetaTable beta_from_pi(const ModuleSetting& S, const PiTable& P);
PiTable pi_from_beta(const ModuleSetting& S, const BetaTable& B);
BracketTable bracket_from_beta(const ModuleSetting& S, const BetaTable& B);
BetaTable beta_from_bracket(const ModuleSetting& S, const BracketTable& T);
SetHMorphism theta_from_bracket(const ModuleSetting& S, const BracketTable& T);
BracketTable bracket_from_theta(const ModuleSetting& S, const SetHMorphism& theta);

/// The bracket computed straight from a family.
BracketTable bracket_from_family(const ModuleSetting& S, const HomFamily& F);
/// m_Y(λ)(a,(b,x)) = (λ\c, m_X(c)(c\(λa), m_X(λa)(b,x))),
/// c = (λa)(((λa)\λ) □^{λa}_{m_X(λa)(b,x)} b).
SetHMorphism my_from_family(const ModuleSetting& S, const HomFamily& F);

/// Validate `l` against its axioms (throws AxiomViolated), then convert one
/// step along the chain family → Π → β → bracket → θ → m_Y.
Layer correspondence_step(const ModuleSetting& S, const Layer& l, Direction d);

}  // namespace dynrefl
