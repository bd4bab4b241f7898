#include "bendtrop/f1algebra.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace bendtrop {

// ---------------------------------------------------------------- FiniteRing

FiniteRing::FiniteRing(std::vector<std::string> names, std::vector<std::vector<int>> add,
                       std::vector<std::vector<int>> mul, int zero, int one)
    : names_(std::move(names)), add_(std::move(add)), mul_(std::move(mul)), zero_(zero), one_(one) {
    const int n = size();
    if (zero_ < 0 || zero_ >= n || one_ < 0 || one_ >= n)
        throw std::invalid_argument("finite ring: zero/one index out of range");
    auto check_table = [n](const std::vector<std::vector<int>>& t, const char* what) {
        if (static_cast<int>(t.size()) != n) throw std::invalid_argument(std::string("finite ring: bad ") + what);
        for (const auto& row : t) {
            if (static_cast<int>(row.size()) != n)
                throw std::invalid_argument(std::string("finite ring: bad ") + what);
            for (int v : row)
                if (v < 0 || v >= n) throw std::invalid_argument(std::string("finite ring: bad ") + what);
        }
    };
    check_table(add_, "addition table");
    check_table(mul_, "multiplication table");
    for (int a = 0; a < n; ++a) {
        if (add_[a][zero_] != a || mul_[a][one_] != a || mul_[a][zero_] != zero_)
            throw std::invalid_argument("finite ring: unit laws violated");
        for (int b = 0; b < n; ++b) {
            if (add_[a][b] != add_[b][a] || mul_[a][b] != mul_[b][a])
                throw std::invalid_argument("finite ring: not commutative");
            for (int c = 0; c < n; ++c) {
                if (add_[add_[a][b]][c] != add_[a][add_[b][c]])
                    throw std::invalid_argument("finite ring: addition not associative");
                if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
                    throw std::invalid_argument("finite ring: multiplication not associative");
                if (mul_[a][add_[b][c]] != add_[mul_[a][b]][mul_[a][c]])
                    throw std::invalid_argument("finite ring: distributivity violated");
            }
        }
    }
    neg_.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (add_[a][b] == zero_) neg_[a] = b;
    for (int a = 0; a < n; ++a)
        if (neg_[a] < 0) throw std::invalid_argument("finite ring: missing additive inverse");
}

FiniteRing FiniteRing::integers_mod(int n) {
    if (n < 2) throw std::invalid_argument("integers_mod: n must be >= 2");
    std::vector<std::string> names(n);
    std::vector<std::vector<int>> add(n, std::vector<int>(n)), mul(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a) {
        names[a] = std::to_string(a);
        for (int b = 0; b < n; ++b) {
            add[a][b] = (a + b) % n;
            mul[a][b] = (a * b) % n;
        }
    }
    return FiniteRing(std::move(names), std::move(add), std::move(mul), 0, 1);
}

namespace {

std::vector<int> poly_mul_mod(const std::vector<int>& a, const std::vector<int>& b,
                              const std::vector<int>& modulus, int p) {
    std::vector<int> prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    // reduce mod the (monic-normalized) modulus
    const int deg = static_cast<int>(modulus.size()) - 1;
    int lead = modulus[deg] % p;
    // inverse of lead mod p
    int inv = 1;
    for (int k = 1; k < p; ++k)
        if (lead * k % p == 1) inv = k;
    for (int i = static_cast<int>(prod.size()) - 1; i >= deg; --i) {
        int c = prod[i] % p;
        if (c == 0) continue;
        int f = c * inv % p;
        for (int j = 0; j <= deg; ++j)
            prod[i - deg + j] = ((prod[i - deg + j] - f * modulus[j]) % p + p * p) % p;
    }
    prod.resize(deg);
    return prod;
}

std::string residue_name(const std::vector<int>& c, const std::string& var) {
    std::string s;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        if (c[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0 || c[i] != 1) s += std::to_string(c[i]);
        if (i >= 1) {
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

}  // namespace

FiniteRing FiniteRing::poly_quotient(int p, const std::vector<int>& modulus, const std::string& var) {
    if (p < 2) throw std::invalid_argument("poly_quotient: p must be a prime >= 2");
    if (modulus.size() < 2 || modulus.back() % p == 0)
        throw std::invalid_argument("poly_quotient: bad modulus");
    const int deg = static_cast<int>(modulus.size()) - 1;
    int count = 1;
    for (int i = 0; i < deg; ++i) count *= p;
    std::vector<std::vector<int>> elems(count, std::vector<int>(deg, 0));
    for (int e = 0; e < count; ++e) {
        int v = e;
        for (int i = 0; i < deg; ++i) {
            elems[e][i] = v % p;
            v /= p;
        }
    }
    auto index_of = [&](const std::vector<int>& c) {
        int idx = 0, mult = 1;
        for (int i = 0; i < deg; ++i) {
            idx += (c[i] % p) * mult;
            mult *= p;
        }
        return idx;
    };
    std::vector<std::string> names(count);
    std::vector<std::vector<int>> add(count, std::vector<int>(count)), mul(count, std::vector<int>(count));
    for (int a = 0; a < count; ++a) {
        names[a] = residue_name(elems[a], var);
        for (int b = 0; b < count; ++b) {
            std::vector<int> s(deg);
            for (int i = 0; i < deg; ++i) s[i] = (elems[a][i] + elems[b][i]) % p;
            add[a][b] = index_of(s);
            mul[a][b] = index_of(poly_mul_mod(elems[a], elems[b], modulus, p));
        }
    }
    int one = index_of([&] {
        std::vector<int> c(deg, 0);
        c[0] = 1;
        return c;
    }());
    return FiniteRing(std::move(names), std::move(add), std::move(mul), 0, one);
}

int FiniteRing::index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (names_[i] == name) return i;
    throw std::invalid_argument("finite ring: no element named '" + name + "'");
}

bool FiniteRing::has_zero_divisors() const {
    for (int a = 0; a < size(); ++a)
        for (int b = 0; b < size(); ++b)
            if (a != zero_ && b != zero_ && mul_[a][b] == zero_) return true;
    return false;
}

int FiniteRing::from_int(long n) const {
    int acc = zero_;
    long m = n >= 0 ? n : -n;
    for (long i = 0; i < m; ++i) acc = add_[acc][one_];
    return n >= 0 ? acc : neg_[acc];
}

// -------------------------------------------------------------------- Monoid

std::shared_ptr<const Monoid> Monoid::free(std::vector<std::string> vars) {
    auto m = std::shared_ptr<Monoid>(new Monoid());
    m->kind_ = Kind::Free;
    m->vars_ = std::move(vars);
    return m;
}

std::shared_ptr<const Monoid> Monoid::table(std::vector<std::string> names,
                                            std::vector<std::vector<int>> mul, int zero, int one) {
    auto m = std::shared_ptr<Monoid>(new Monoid());
    m->kind_ = Kind::Table;
    m->names_ = std::move(names);
    m->mul_ = std::move(mul);
    m->zero_ = zero;
    m->one_ = one;
    const int n = m->table_size();
    if (zero < 0 || zero >= n || one < 0 || one >= n)
        throw std::invalid_argument("table monoid: zero/one out of range");
    if (static_cast<int>(m->mul_.size()) != n)
        throw std::invalid_argument("table monoid: bad table size");
    for (const auto& row : m->mul_) {
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("table monoid: bad row size");
        for (int v : row)
            if (v < 0 || v >= n) throw std::invalid_argument("table monoid: entry out of range");
    }
    for (int a = 0; a < n; ++a) {
        if (m->mul_[a][one] != a) throw std::invalid_argument("table monoid: one is not an identity");
        if (m->mul_[a][zero] != zero) throw std::invalid_argument("table monoid: zero is not absorbing");
        for (int b = 0; b < n; ++b) {
            if (m->mul_[a][b] != m->mul_[b][a]) throw std::invalid_argument("table monoid: not commutative");
            for (int c = 0; c < n; ++c)
                if (m->mul_[m->mul_[a][b]][c] != m->mul_[a][m->mul_[b][c]])
                    throw std::invalid_argument("table monoid: not associative");
        }
    }
    return m;
}

std::shared_ptr<const Monoid> Monoid::rationals() {
    auto m = std::shared_ptr<Monoid>(new Monoid());
    m->kind_ = Kind::Rationals;
    return m;
}

Elt Monoid::one() const {
    switch (kind_) {
        case Kind::Free: return FreeElt{false, std::vector<Int>(vars_.size(), Int(0))};
        case Kind::Table: return TableElt{one_};
        case Kind::Rationals: return RatElt{Rat(1)};
    }
    throw std::logic_error("unreachable");
}

Elt Monoid::zero() const {
    switch (kind_) {
        case Kind::Free: return FreeElt{true, {}};
        case Kind::Table: return TableElt{zero_};
        case Kind::Rationals: return RatElt{Rat(0)};
    }
    throw std::logic_error("unreachable");
}

Elt Monoid::generator(int i) const {
    if (kind_ != Kind::Free || i < 0 || i >= var_count())
        throw std::invalid_argument("generator: bad index or not a free monoid");
    FreeElt e{false, std::vector<Int>(vars_.size(), Int(0))};
    e.exp[i] = 1;
    return e;
}

Elt Monoid::table_element(int i) const {
    if (kind_ != Kind::Table || i < 0 || i >= table_size())
        throw std::invalid_argument("table_element: bad index");
    return TableElt{i};
}

Elt Monoid::rational_element(Rat q) const {
    if (kind_ != Kind::Rationals) throw std::invalid_argument("rational_element: wrong monoid kind");
    return RatElt{std::move(q)};
}

void Monoid::check_element(const Elt& e) const {
    switch (kind_) {
        case Kind::Free: {
            const auto* f = std::get_if<FreeElt>(&e);
            if (!f || (!f->zero && static_cast<int>(f->exp.size()) != var_count()))
                throw std::invalid_argument("element does not belong to this free monoid");
            return;
        }
        case Kind::Table: {
            const auto* t = std::get_if<TableElt>(&e);
            if (!t || t->idx < 0 || t->idx >= table_size())
                throw std::invalid_argument("element index out of range for table monoid");
            return;
        }
        case Kind::Rationals:
            if (!std::get_if<RatElt>(&e))
                throw std::invalid_argument("element does not belong to the rational monoid");
            return;
    }
}

bool Monoid::is_zero(const Elt& e) const {
    switch (kind_) {
        case Kind::Free: return std::get<FreeElt>(e).zero;
        case Kind::Table: return std::get<TableElt>(e).idx == zero_;
        case Kind::Rationals: return rat_is_zero(std::get<RatElt>(e).value);
    }
    return false;
}

bool Monoid::is_one(const Elt& e) const { return e == one(); }

Elt Monoid::mul(const Elt& a, const Elt& b) const {
    check_element(a);
    check_element(b);
    switch (kind_) {
        case Kind::Free: {
            const auto& fa = std::get<FreeElt>(a);
            const auto& fb = std::get<FreeElt>(b);
            if (fa.zero || fb.zero) return zero();
            FreeElt r{false, fa.exp};
            for (std::size_t i = 0; i < r.exp.size(); ++i) r.exp[i] += fb.exp[i];
            return r;
        }
        case Kind::Table: return TableElt{mul_[std::get<TableElt>(a).idx][std::get<TableElt>(b).idx]};
        case Kind::Rationals: return RatElt{std::get<RatElt>(a).value * std::get<RatElt>(b).value};
    }
    throw std::logic_error("unreachable");
}

std::optional<Elt> Monoid::divide(const Elt& a, const Elt& b) const {
    check_element(a);
    check_element(b);
    if (is_zero(b)) return std::nullopt;
    switch (kind_) {
        case Kind::Free: {
            const auto& fa = std::get<FreeElt>(a);
            const auto& fb = std::get<FreeElt>(b);
            if (fa.zero) return zero();
            FreeElt r{false, fa.exp};
            for (std::size_t i = 0; i < r.exp.size(); ++i) {
                r.exp[i] -= fb.exp[i];
                if (r.exp[i] < 0) return std::nullopt;
            }
            return Elt{r};
        }
        case Kind::Table: {
            const int ia = std::get<TableElt>(a).idx, ib = std::get<TableElt>(b).idx;
            for (int c = 0; c < table_size(); ++c)
                if (mul_[ib][c] == ia) return Elt{TableElt{c}};
            return std::nullopt;
        }
        case Kind::Rationals:
            return Elt{RatElt{std::get<RatElt>(a).value / std::get<RatElt>(b).value}};
    }
    return std::nullopt;
}

Int Monoid::degree(const Elt& e) const {
    if (kind_ != Kind::Free) return 0;
    const auto& f = std::get<FreeElt>(e);
    if (f.zero) return 0;
    Int d = 0;
    for (const auto& x : f.exp) d += x;
    return d;
}

bool Monoid::less(const Elt& a, const Elt& b) const {
    switch (kind_) {
        case Kind::Free: {
            const auto& fa = std::get<FreeElt>(a);
            const auto& fb = std::get<FreeElt>(b);
            if (fa.zero || fb.zero) return fa.zero && !fb.zero;  // zero sorts first
            const Int da = degree(a), db = degree(b);
            if (da != db) return da < db;
            return fa.exp < fb.exp;
        }
        case Kind::Table: return std::get<TableElt>(a).idx < std::get<TableElt>(b).idx;
        case Kind::Rationals: return rat_cmp(std::get<RatElt>(a).value, std::get<RatElt>(b).value) < 0;
    }
    return false;
}

std::string Monoid::to_string(const Elt& e) const {
    switch (kind_) {
        case Kind::Free: {
            const auto& f = std::get<FreeElt>(e);
            if (f.zero) return "0";
            std::string s;
            for (int i = 0; i < var_count(); ++i) {
                if (f.exp[i] == 0) continue;
                if (!s.empty()) s += "*";
                s += vars_[i];
                if (f.exp[i] != 1) s += "^" + f.exp[i].str();
            }
            return s.empty() ? "1" : s;
        }
        case Kind::Table: return names_[std::get<TableElt>(e).idx];
        case Kind::Rationals: {
            const auto& q = std::get<RatElt>(e).value;
            return "x_{" + rat_to_string(q) + "}";
        }
    }
    return "?";
}

void Monoid::append_key(const Elt& e, std::string& out) const {
    switch (kind_) {
        case Kind::Free: {
            const auto& f = std::get<FreeElt>(e);
            if (f.zero) {
                out += "z";
                return;
            }
            for (const auto& x : f.exp) {
                out += x.str();
                out += ',';
            }
            return;
        }
        case Kind::Table:
            out += std::to_string(std::get<TableElt>(e).idx);
            return;
        case Kind::Rationals:
            out += rat_to_string(std::get<RatElt>(e).value);
            return;
    }
}

std::shared_ptr<const Monoid> multiplicative_monoid(const FiniteRing& ring) {
    const int n = ring.size();
    std::vector<std::string> names(n);
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a) {
        names[a] = ring.name(a);
        for (int b = 0; b < n; ++b) mul[a][b] = ring.mul(a, b);
    }
    return Monoid::table(std::move(names), std::move(mul), ring.zero(), ring.one());
}

bool is_integral(const Monoid& m) {
    if (m.kind() != Monoid::Kind::Table) return true;  // free monoids and M(Q) are integral
    const int n = m.table_size();
    const int z = std::get<TableElt>(m.zero()).idx;
    auto prod = [&](int a, int b) { return std::get<TableElt>(m.mul(TableElt{a}, TableElt{b})).idx; };
    for (int a = 0; a < n; ++a) {
        if (a == z) continue;
        for (int b = 0; b < n; ++b) {
            if (b == z) continue;
            if (prod(a, b) == z) return false;  // zero divisors
        }
    }
    // cancellativity on the nonzero part
    for (int a = 0; a < n; ++a) {
        if (a == z) continue;
        for (int b = 0; b < n; ++b) {
            if (b == z) continue;
            for (int c = 0; c < n; ++c) {
                if (c == z) continue;
                if (prod(a, b) == prod(a, c) && b != c) return false;
            }
        }
    }
    return true;
}

// ----------------------------------------------------------------- MonoidHom

MonoidHom::MonoidHom(std::shared_ptr<const Monoid> source, std::shared_ptr<const Monoid> target,
                     std::vector<Elt> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    for (const auto& img : images_) target_->check_element(img);
    switch (source_->kind()) {
        case Monoid::Kind::Free:
            if (static_cast<int>(images_.size()) != source_->var_count())
                throw std::invalid_argument("monoid hom: one image per generator required");
            break;
        case Monoid::Kind::Table: {
            const int n = source_->table_size();
            if (static_cast<int>(images_.size()) != n)
                throw std::invalid_argument("monoid hom: one image per element required");
            if (!(images_[std::get<TableElt>(source_->zero()).idx] == target_->zero()))
                throw std::invalid_argument("monoid hom: zero not preserved");
            if (!(images_[std::get<TableElt>(source_->one()).idx] == target_->one()))
                throw std::invalid_argument("monoid hom: one not preserved");
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    Elt lhs = images_[std::get<TableElt>(source_->mul(TableElt{a}, TableElt{b})).idx];
                    Elt rhs = target_->mul(images_[a], images_[b]);
                    if (!(lhs == rhs))
                        throw std::invalid_argument("monoid hom: multiplication not preserved at (" +
                                                    source_->element_names()[a] + ", " +
                                                    source_->element_names()[b] + ")");
                }
            break;
        }
        case Monoid::Kind::Rationals:
            throw std::invalid_argument("monoid hom: rational-monoid source not supported");
    }
}

Elt MonoidHom::apply(const Elt& e) const {
    source_->check_element(e);
    switch (source_->kind()) {
        case Monoid::Kind::Free: {
            const auto& f = std::get<FreeElt>(e);
            if (f.zero) return target_->zero();
            Elt acc = target_->one();
            for (int i = 0; i < source_->var_count(); ++i) {
                for (Int k = 0; k < f.exp[i]; ++k) acc = target_->mul(acc, images_[i]);
            }
            return acc;
        }
        case Monoid::Kind::Table: return images_[std::get<TableElt>(e).idx];
        case Monoid::Kind::Rationals: break;
    }
    throw std::logic_error("unreachable");
}

}  // namespace bendtrop
