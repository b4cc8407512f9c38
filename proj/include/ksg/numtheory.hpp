#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ksg {

bool is_prime(std::uint64_t n);
// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);
// True iff n == p^k for some k >= 0.
bool is_power_of(std::uint64_t n, std::uint64_t p);
std::uint64_t ipow(std::uint64_t base, unsigned exp);

}  // namespace ksg
