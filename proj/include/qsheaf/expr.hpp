#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "qsheaf/types.hpp"

namespace qsheaf {

namespace node {
struct Atom;
struct Sum;
struct Twist;
struct Quotient;
struct Restrict;
}  // namespace node

/// Immutable expression tree over generators on a fixed quadric. Cheap to copy.
class SheafExpr {
 public:
  using Node = std::variant<node::Atom, node::Sum, node::Twist, node::Quotient, node::Restrict>;

  static SheafExpr atom(Quadric q, std::vector<Generator> generators);
  static SheafExpr sum(std::vector<SheafExpr> terms);
  static SheafExpr twist(SheafExpr child, int k);
  static SheafExpr quotient(SheafExpr sub, SheafExpr mid);
  static SheafExpr restrict_to_hyperplane(SheafExpr child);

  const Quadric& quadric() const noexcept { return *quadric_; }
  const Node& node() const noexcept;

  bool is_atom() const noexcept;
  const node::Atom* as_atom() const noexcept;

  Dim rank() const;
  /// Nesting depth of non-atom nodes.
  int depth() const;
  /// max |twist| over all atoms.
  int max_abs_twist() const;
  /// True when every generator reachable through sums, twists and quotient targets is a skyscraper.
  bool finite_support() const;
  /// Every node is an atom or a sum of atoms, i.e. the sheaf is a direct sum of generators.
  bool is_split() const;
  /// Generators of a split expression with twists applied.
  std::vector<Generator> split_generators() const;

  /// Canonical text without the quadric header.
  std::string body() const;
  /// Canonical text including the `Qn:` header; reparses to an equal expression.
  std::string to_string() const;

  bool operator==(const SheafExpr& o) const { return to_string() == o.to_string(); }

 private:
  SheafExpr(Quadric q, Node n);

  std::shared_ptr<const Quadric> quadric_;
  std::shared_ptr<const Node> node_;
};

namespace node {
/// Direct sum of generators (a multiset; kept sorted once normalized).
struct Atom {
  std::vector<Generator> generators;
};
struct Sum {
  std::vector<SheafExpr> terms;
};
struct Twist {
  SheafExpr child;
  int k = 0;
};
/// Cokernel of an injection sub -> mid.
struct Quotient {
  SheafExpr sub;
  SheafExpr mid;
};
/// Restriction of a sheaf on Q_{n+1} to a general hyperplane section Q_n.
struct Restrict {
  SheafExpr child;
};
}  // namespace node

inline const SheafExpr::Node& SheafExpr::node() const noexcept { return *node_; }

/// Twists pushed to atoms, sums flattened, atoms merged and generators sorted.
/// Restrict nodes are kept so tables of restrictions go through the restriction sequence.
SheafExpr normalize(const SheafExpr& e);

/// Push Restrict nodes down to the atoms using the generator restriction rules.
SheafExpr push_restrictions(const SheafExpr& e);

/// Generator-wise dual of a split expression, using the spinor duality rule.
SheafExpr split_dual(const SheafExpr& e);

/// Restriction of one generator on Q_n to Q_{n-1}.
std::vector<Generator> restrict_generator(const Quadric& q, const Generator& g);

/// First Chern class as a multiple of the hyperplane class; defined for n >= 3.
Dim first_chern(const SheafExpr& e);

}  // namespace qsheaf
