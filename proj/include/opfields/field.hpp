/*
   Copyright 2026 The opfields authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef OPFIELDS_FIELD_HPP
#define OPFIELDS_FIELD_HPP

#include <concepts>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bigint.hpp"
#include "fracpoly.hpp"
#include "prime_field.hpp"
#include "rational.hpp"

namespace opfields {

template <class K>
concept field = requires(K a, K b) {
    { K::zero() } -> std::same_as<K>;
    { K::one() } -> std::same_as<K>;
    { K::from_int(1ll) } -> std::same_as<K>;
    { a + b } -> std::same_as<K>;
    { a - b } -> std::same_as<K>;
    { a * b } -> std::same_as<K>;
    { a / b } -> std::same_as<K>;
    { -a } -> std::same_as<K>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
};

template <class K>
struct field_traits;

template <>
struct field_traits<Rat> {
    static constexpr uint32_t characteristic = 0;
    static constexpr bool is_function_field = false;
    using base_type = Rat;
};

template <uint32_t P>
struct field_traits<Fp<P>> {
    static constexpr uint32_t characteristic = P;
    static constexpr bool is_function_field = false;
    using base_type = Fp<P>;
};

template <class C>
struct field_traits<FracPoly<C>> {
    static constexpr uint32_t characteristic = field_traits<C>::characteristic;
    static constexpr bool is_function_field = true;
    using base_type = C;
};

template <class K>
constexpr uint32_t field_char = field_traits<K>::characteristic;

template <class K>
constexpr bool is_function_field = field_traits<K>::is_function_field;

template <field K>
K field_from_bigint(const BigInt& b);

/// Binomial coefficient computed in Z and reduced into the field.
template <field K>
K binomial(int n, int k)
{
    return field_from_bigint<K>(binomial_z(n, k));
}

template <field K>
K field_from_bigint(const BigInt& b)
{
    if constexpr (field_char<K> != 0) {
        return K::from_int(static_cast<long long>(b.mod_u64(field_char<K>)));
    } else if constexpr (std::same_as<K, Rat>) {
        return K(b);
    } else {
        static_assert(is_function_field<K>);
        return K(Poly<typename field_traits<K>::base_type>(Rat(b)));
    }
}

// ---------------------------------------------------------------------------
// Textual scalar encoding.
// Rationals "a/b" (or "a"); prime-field elements "r mod p"; rational
// functions "(num)/(den)" with monomial terms "c*t^k" joined by "+".
// ---------------------------------------------------------------------------

inline std::string scalar_str(const Rat& r) { return r.str(); }

template <uint32_t P>
std::string scalar_str(const Fp<P>& x)
{
    return x.str();
}

template <class C>
std::string poly_terms_str(const Poly<C>& p)
{
    if (p.is_zero()) return "0*t^0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        C c = p.coeff(k);
        if (c.is_zero()) continue;
        if (!out.empty()) out += "+";
        out += scalar_str(c) + "*t^" + std::to_string(k);
    }
    return out;
}

template <class C>
std::string scalar_str(const FracPoly<C>& f)
{
    return "(" + poly_terms_str(f.num()) + ")/(" + poly_terms_str(f.den()) + ")";
}

template <field K>
K scalar_parse(std::string_view s);

namespace detail {

inline std::string_view strip(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

template <class C>
Poly<C> parse_poly_terms(std::string_view s)
{
    s = strip(s);
    Poly<C> acc;
    size_t start = 0;
    for (size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == '+') {
            std::string_view term = strip(s.substr(start, i - start));
            start = i + 1;
            if (term.empty()) continue;
            auto star = term.rfind("*t^");
            C c;
            int k = 0;
            if (star == std::string_view::npos) {
                c = scalar_parse<C>(term);
            } else {
                c = scalar_parse<C>(strip(term.substr(0, star)));
                k = std::stoi(std::string(term.substr(star + 3)));
            }
            acc = acc + Poly<C>::monomial(c, k);
        }
    }
    return acc;
}

}  // namespace detail

template <field K>
K scalar_parse(std::string_view s)
{
    s = detail::strip(s);
    if (s.empty()) throw std::invalid_argument("scalar: empty literal");
    if constexpr (is_function_field<K>) {
        using C = typename field_traits<K>::base_type;
        if (s.front() == '(') {
            auto close = s.find(')');
            if (close == std::string_view::npos)
                throw std::invalid_argument("scalar: unbalanced parenthesis");
            std::string_view numpart = s.substr(1, close - 1);
            std::string_view rest = detail::strip(s.substr(close + 1));
            if (rest.empty())
                return K(detail::parse_poly_terms<C>(numpart));
            if (rest.front() != '/' )
                throw std::invalid_argument("scalar: expected '/' between fraction parts");
            rest = detail::strip(rest.substr(1));
            if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')')
                throw std::invalid_argument("scalar: malformed denominator");
            return K(detail::parse_poly_terms<C>(numpart),
                     detail::parse_poly_terms<C>(rest.substr(1, rest.size() - 2)));
        }
        // bare base-field constant or "t"
        if (s == "t") return K(Poly<C>::t());
        return K(Poly<C>(scalar_parse<C>(s)));
    } else if constexpr (field_char<K> == 0) {
        return Rat::parse(s);
    } else {
        return K::parse(s);
    }
}

}  // namespace opfields

#endif
