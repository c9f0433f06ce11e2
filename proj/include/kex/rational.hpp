// Copyright 2026 the kexcore authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KEX_RATIONAL_HPP
#define KEX_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace kex {

// Exact rational scalar used throughout the LP / pivoting / rounding path.
using Rat = mpq_class;

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

inline long rat_to_long(const Rat& r) { return mpz_get_si(r.get_num_mpz_t()); }

// floor of an exact rational
inline long rat_floor(const Rat& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return mpz_get_si(q.get_mpz_t());
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Rat rat_parse(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    return r;
}

// rank over Q of a dense matrix, by Gaussian elimination
int rational_rank(std::vector<std::vector<Rat>> m);

}  // namespace kex

#endif  // KEX_RATIONAL_HPP
