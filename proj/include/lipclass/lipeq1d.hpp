#pragma once

#include <string>
#include <vector>

#include "lipclass/algnum.hpp"
#include "lipclass/poly.hpp"

namespace lipclass {

struct CriticalPoint {
  AlgebraicNumber location;
  int multiplicity;  // 1 + order of location as a root of f'
};

struct CriticalData {
  std::vector<CriticalPoint> points;  // strictly ascending
};

// All real critical points of a non-constant f.
CriticalData critical_points(const RationalPoly& f);

struct MultiplicitySymbol {
  std::vector<AlgebraicNumber> values;
  std::vector<int> mults;

  std::size_t size() const { return values.size(); }
};

// Requires at least two critical points; PreconditionError otherwise.
MultiplicitySymbol multiplicity_symbol(const RationalPoly& f);

/// Admissible constants c > 0 in g∘φ = c·f for one orientation of φ.
class ConstantSet {
 public:
  enum class Kind { Empty, AllPositive, Finite };

  ConstantSet() = default;
  static ConstantSet empty() { return {}; }
  static ConstantSet all_positive();
  // Members must be positive; duplicates are dropped.
  static ConstantSet finite(std::vector<AlgebraicNumber> members);
  static ConstantSet single(const AlgebraicNumber& c) { return finite({c}); }

  Kind kind() const { return kind_; }
  bool is_empty() const { return kind_ == Kind::Empty; }
  const std::vector<AlgebraicNumber>& members() const { return members_; }
  bool contains(const AlgebraicNumber& c) const;

  ConstantSet unite(const ConstantSet& other) const;
  ConstantSet intersect(const ConstantSet& other) const;
  // Some member; 1 when every positive number is admissible. Throws on Empty.
  AlgebraicNumber representative() const;

  std::string to_string() const;

 private:
  Kind kind_ = Kind::Empty;
  std::vector<AlgebraicNumber> members_;
};

struct Similarity {
  ConstantSet direct;
  ConstantSet reverse;
};

Similarity symbols_similarity(const MultiplicitySymbol& a, const MultiplicitySymbol& b);

/// Outcome of the univariate test. `direct` holds the constants realised by an
/// increasing φ, `reverse` those realised by a decreasing φ.
struct Verdict1D {
  bool equivalent = false;
  ConstantSet direct;
  ConstantSet reverse;
  std::string reason;
};

Verdict1D equivalence_1d(const RationalPoly& f, const RationalPoly& g);

}  // namespace lipclass
