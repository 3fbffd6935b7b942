#include "p1stab/kclass.hpp"

#include <stdexcept>

namespace p1stab {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("integer overflow in addition");
    }
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw std::overflow_error("integer overflow in subtraction");
    }
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("integer overflow in multiplication");
    }
    return r;
}

KClass operator+(const KClass& a, const KClass& b) {
    return {checked_add(a.rank, b.rank), checked_add(a.degree, b.degree)};
}

KClass operator-(const KClass& a) {
    return {checked_sub(0, a.rank), checked_sub(0, a.degree)};
}

KClass operator-(const KClass& a, const KClass& b) {
    return {checked_sub(a.rank, b.rank), checked_sub(a.degree, b.degree)};
}

KClass operator*(std::int64_t n, const KClass& a) {
    return {checked_mul(n, a.rank), checked_mul(n, a.degree)};
}

std::int64_t euler_form(const KClass& a, const KClass& b) {
    // r r' + r d' - d r'
    return checked_sub(checked_add(checked_mul(a.rank, b.rank), checked_mul(a.rank, b.degree)),
                       checked_mul(a.degree, b.rank));
}

std::string to_string(const KClass& c) {
    return "(" + std::to_string(c.rank) + ", " + std::to_string(c.degree) + ")";
}

}  // namespace p1stab
