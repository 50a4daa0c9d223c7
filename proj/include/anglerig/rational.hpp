#ifndef ANGLERIG_RATIONAL_HPP
#define ANGLERIG_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace anglerig {

// Exact scalars. mpq_class keeps values reduced with positive denominators,
// which is exactly the invariant the rest of the library relies on.
using Int = mpz_class;
using Rat = mpq_class;

// Accepts "a/b", "a", or a finite decimal like "-1.25".
Rat rat_from_string(const std::string& text);

// "a" when the denominator is 1, "a/b" otherwise.
std::string rat_to_string(const Rat& value);

} // namespace anglerig

#endif
