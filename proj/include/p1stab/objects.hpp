#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "p1stab/kclass.hpp"

namespace p1stab {

/// A twist of the structure sheaf, shifted: O(twist)[shift].
struct LineBundle {
    std::int64_t twist = 0;
    std::int64_t shift = 0;

    friend auto operator<=>(const LineBundle&, const LineBundle&) = default;
};

/// A thickened skyscraper at a point, shifted: T(point, length)[shift].
/// Points are opaque labels compared by equality; stability data depends
/// only on the length, but Hom dimensions need point identity.
struct Torsion {
    std::string point;
    std::int64_t length = 1;
    std::int64_t shift = 0;

    friend auto operator<=>(const Torsion&, const Torsion&) = default;
};

using Indecomposable = std::variant<LineBundle, Torsion>;

std::int64_t shift_of(const Indecomposable& ind);
Indecomposable with_shift(Indecomposable ind, std::int64_t shift);

/// Canonical order: shift, then kind (bundles before torsion), then
/// twist resp. (point, length).
std::strong_ordering compare(const Indecomposable& a, const Indecomposable& b);

struct Summand {
    Indecomposable part;
    std::int64_t multiplicity = 1;

    friend bool operator==(const Summand&, const Summand&) = default;
};

/// A normalized formal direct sum of indecomposables: summands are sorted
/// canonically, duplicates merged, multiplicities >= 1.  The zero object
/// is the empty sum.
class DecomposedObject {
  public:
    DecomposedObject() = default;
    explicit DecomposedObject(std::vector<Summand> summands);

    static DecomposedObject zero() { return DecomposedObject(); }

    bool is_zero() const { return summands_.empty(); }
    const std::vector<Summand>& summands() const { return summands_; }

    friend bool operator==(const DecomposedObject&, const DecomposedObject&) = default;

  private:
    std::vector<Summand> summands_;
};

/// Parses the object literal grammar:
///   object := term ('+' term)*
///   term   := [mult '*'] atom
///   atom   := 'O' [ '(' int ')' ] [ '[' int ']' ]
///           | 'T' '(' label ',' length ')' [ '[' int ']' ]
/// "O" alone means O(0).  Lengths must be >= 1, multiplicities >= 1.
/// Throws std::invalid_argument with the offending position.
DecomposedObject parse_object(std::string_view text);

/// Canonical literal; format(parse(s)) is a fixed point.  Zero prints "0".
std::string format_object(const DecomposedObject& obj);
std::string format_indecomposable(const Indecomposable& ind);

/// Tensors every line-bundle summand by O(twist_by) (torsion sheaves are
/// unchanged) and adds shift_by to all shifts.
DecomposedObject act_object(const DecomposedObject& obj, std::int64_t twist_by,
                            std::int64_t shift_by);

KClass class_of(const Indecomposable& ind);
KClass class_of(const DecomposedObject& obj);

}  // namespace p1stab
