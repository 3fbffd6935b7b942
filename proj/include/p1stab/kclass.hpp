#pragma once

#include <cstdint>
#include <string>

namespace p1stab {

/// Checked 64-bit integer arithmetic. Twist windows are small but CLI
/// input is untrusted, so every K-theory operation traps on overflow.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Class of an object in the Grothendieck group of D(P^1), written in the
/// basis ([O], [O_x]) as a (rank, degree) pair.  [O(n)] = (1, n),
/// [O_x thickened l times] = (0, l), and a shift by k multiplies by (-1)^k.
struct KClass {
    std::int64_t rank = 0;
    std::int64_t degree = 0;

    friend bool operator==(const KClass&, const KClass&) = default;
};

KClass operator+(const KClass& a, const KClass& b);
KClass operator-(const KClass& a);
KClass operator-(const KClass& a, const KClass& b);
KClass operator*(std::int64_t n, const KClass& a);

/// Euler pairing chi(a, b) = r r' + r d' - d r'  (Riemann-Roch on P^1).
std::int64_t euler_form(const KClass& a, const KClass& b);

std::string to_string(const KClass& c);

}  // namespace p1stab
