#include "yf/q_poly.hpp"

#include <stdexcept>

namespace yf {

const Poly& QTable::store(const Word& w, const Word& v, Poly q)
{
    return cache_.try_emplace({w, v}, std::move(q)).first->second;
}

const Poly& QTable::q_eps(const Word& v)
{
    const Word root;
    if (auto it = cache_.find({root, v}); it != cache_.end()) return it->second;

    const auto first_two = v.digits().find('2');
    if (first_two == std::string::npos) return store(root, v, Poly::constant(1));
    if (first_two > 0) {
        Poly inner = q_eps(Word::from_digits(v.digits().substr(first_two)));
        return store(root, v, std::move(inner));
    }

    // Q_{e,2v} = (1-p) (p Q_{e,v})' + (|v|+1) p Q_{e,v}
    const Word rest = v.tail();
    const Poly prev = q_eps(rest);
    const Poly p = Poly::variable();
    Poly q = Poly::one_minus_variable() * (p * prev).derivative() +
             BigInt(static_cast<unsigned long>(rest.rank() + 1)) * (p * prev);
    return store(root, v, std::move(q));
}

const Poly& QTable::q_gen(const Word& w, const Word& v)
{
    if (w.empty()) return q_eps(v);
    if (auto it = cache_.find({w, v}); it != cache_.end()) return it->second;
    if (!leq(w, v))
        throw std::domain_error("Q(" + w.str() + ", " + v.str() + ") is undefined: " + w.str() +
                                " is not below " + v.str());

    if (single_chain(w, v)) return store(w, v, Poly::constant(1));

    Word cur = v;
    while (cur.front() == '1') {
        cur = cur.tail();
        if (single_chain(w, cur)) return store(w, v, Poly::constant(1));
    }
    if (cur != v) {
        Poly inner = q_gen(w, cur);
        return store(w, v, std::move(inner));
    }

    // Q_{w,2v} = p (1-p) Q_{w,v}' + (|v|+1-|w|) p Q_{w,v} + Q_{w',v}, with
    // Q_{w,v} read as 0 when w is not below v.
    const Word rest = cur.tail();
    Poly q = q_gen(w.tail(), rest);
    if (leq(w, rest)) {
        const Poly same = q_gen(w, rest);
        const Poly p = Poly::variable();
        const long factor = static_cast<long>(rest.rank()) + 1 - static_cast<long>(w.rank());
        q += p * Poly::one_minus_variable() * same.derivative();
        q += BigInt(factor) * (p * same);
    }
    return store(w, v, std::move(q));
}

Poly QTable::q_from_f(const Word& w, const Word& v)
{
    const FVector& f = f_table_.f_gen(w, v);
    const std::size_t deg = f.degree();
    Poly out;
    for (std::size_t i = 0; i <= deg; ++i)
        out += f.coeffs[i] * (pow(Poly::one_minus_variable(), i) * pow(Poly::variable(), deg - i));
    return out;
}

Poly q_eps(const Word& v) { return QTable{}.q_eps(v); }
Poly q_gen(const Word& w, const Word& v) { return QTable{}.q_gen(w, v); }
Poly q_from_f(const Word& w, const Word& v) { return QTable{}.q_from_f(w, v); }

bool positivity_check(const Poly& q, std::span<const BigRat> samples)
{
    for (const BigRat& p : samples)
        if (q.eval(p) <= 0) return false;
    return true;
}

} // namespace yf
