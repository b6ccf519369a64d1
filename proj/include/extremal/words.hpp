// Fibonacci words and their images under the monoid morphism a -> A, b -> B.

#ifndef EXTREMAL_WORDS_HPP
#define EXTREMAL_WORDS_HPP

#include <string>
#include <string_view>

#include "extremal/sequence.hpp"
#include "extremal/triple.hpp"

namespace extremal {

// Fibonacci sequence of words: w_0 = "b", w_1 = "a", w_i = w_{i-1} w_{i-2}.
inline std::string fibonacci_word_term(long i) {
    if (i < 0) throw ValidationError("word index must be >= 0");
    if (i == 0) return "b";
    if (i == 1) return "a";
    std::string prev2 = "b", prev = "a";
    for (long j = 2; j <= i; ++j) {
        std::string cur = prev + prev2;
        prev2 = std::move(prev);
        prev = std::move(cur);
    }
    return prev;
}

// First n letters of the infinite Fibonacci word abaabab...
inline std::string fibonacci_word(std::size_t n) {
    std::string w = "a";
    while (w.size() < n) {
        std::string next;
        next.reserve(2 * w.size());
        for (char c : w) next += (c == 'a') ? "ab" : "a";
        w = std::move(next);
    }
    return w.substr(0, n);
}

// m_k: the word w_{k+2} minus its last two letters.  Satisfies m_0 = "",
// m_1 = "a", m_k = m_{k-1} s m_{k-2} with s = "ab" (k odd) / "ba" (k even).
inline std::string fibonacci_prefix(long k) {
    if (k < 0) throw ValidationError("prefix index must be >= 0");
    if (k == 0) return "";
    if (k == 1) return "a";
    std::string prev2 = "", prev = "a";
    for (long j = 2; j <= k; ++j) {
        std::string cur = prev + ((j % 2 != 0) ? "ab" : "ba") + prev2;
        prev2 = std::move(prev);
        prev = std::move(cur);
    }
    return prev;
}

// Multiplicative image of a word under a -> A, b -> B.
inline Mat2 morphism_image(std::string_view word, const SeedPair& seed) {
    Mat2 m = Mat2::identity();
    for (char c : word) {
        if (c == 'a')
            m = m * seed.A;
        else if (c == 'b')
            m = m * seed.B;
        else
            throw ValidationError("word letters must be 'a' or 'b'");
    }
    return m;
}

} // namespace extremal

#endif
