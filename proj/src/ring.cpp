#include "concord/ring.hpp"

#include <algorithm>

namespace concord {

namespace {

void check_same_base(const RingBase& a, const RingBase& b, const char* op) {
    if (!(a == b))
        throw validation_error(std::string(op) + ": base mismatch (" + a.str() +
                               " vs " + b.str() + ")");
}

Monomial mul_monomials(const RingBase& base, const Monomial& a, const Monomial& b) {
    if (base.is_group_base()) {
        Word w = a.to_word(base.rank) * b.to_word(base.rank);
        return Monomial::from_word(w);
    }
    std::vector<std::int64_t> e = a.to_exponents(base.rank);
    std::vector<std::int64_t> f = b.to_exponents(base.rank);
    for (int i = 0; i < base.rank; ++i)
        e[static_cast<size_t>(i)] += f[static_cast<size_t>(i)];
    return Monomial::from_exponents(e);
}

Monomial invert_monomial(const RingBase& base, const Monomial& m) {
    if (base.is_group_base())
        return Monomial::from_word(m.to_word(base.rank).inverse());
    std::vector<std::int64_t> e = m.to_exponents(base.rank);
    for (auto& x : e)
        x = -x;
    return Monomial::from_exponents(e);
}

std::string monomial_str(const RingBase& base, const Monomial& m) {
    if (m.is_identity())
        return "1";
    if (base.is_group_base())
        return m.to_word(base.rank).str();
    std::string out;
    for (const Syllable& s : m.syl) {
        if (!out.empty())
            out += ' ';
        out += 't';
        out += std::to_string(s.gen);
        if (s.exp != 1) {
            out += '^';
            out += std::to_string(s.exp);
        }
    }
    return out;
}

} // namespace

RingBase RingBase::free_group(int rank) {
    if (rank < 2 || rank % 2 != 0)
        throw validation_error("free group rank must be even and at least 2");
    return {BaseKind::free_group, rank, 0};
}

RingBase RingBase::free_abelian(int m) {
    if (m < 0)
        throw validation_error("free abelian rank must be nonnegative");
    return {BaseKind::free_abelian, m, 0};
}

RingBase RingBase::solvable_quotient(int rank, int level) {
    if (rank < 2 || rank % 2 != 0)
        throw validation_error("solvable quotient rank must be even and at least 2");
    if (level < 0)
        throw validation_error("solvable quotient level must be nonnegative");
    return {BaseKind::solvable_quotient, rank, level};
}

std::string RingBase::str() const {
    switch (kind) {
    case BaseKind::free_group:
        return "Z[F_" + std::to_string(rank) + "]";
    case BaseKind::free_abelian:
        return "Z[Z^" + std::to_string(rank) + "]";
    default:
        return "Z[F_" + std::to_string(rank) + "/F^(" + std::to_string(level) + ")]";
    }
}

Monomial Monomial::from_exponents(const std::vector<std::int64_t>& e) {
    Monomial m;
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0)
            m.syl.push_back({static_cast<int>(i) + 1, e[i]});
    return m;
}

Word Monomial::to_word(int rank) const {
    return Word::from_syllables(rank, syl);
}

std::vector<std::int64_t> Monomial::to_exponents(int m) const {
    std::vector<std::int64_t> e(static_cast<size_t>(m), 0);
    for (const Syllable& s : syl) {
        if (s.gen < 1 || s.gen > m)
            throw validation_error("monomial generator index outside abelian rank");
        e[static_cast<size_t>(s.gen - 1)] += s.exp;
    }
    return e;
}

GroupRingElement GroupRingElement::zero(const RingBase& base) {
    return GroupRingElement(base);
}

GroupRingElement GroupRingElement::one(const RingBase& base) {
    return constant(base, 1);
}

GroupRingElement GroupRingElement::constant(const RingBase& base, const mpz_class& c) {
    GroupRingElement e(base);
    if (c != 0)
        e.terms_[Monomial::identity()] = c;
    return e;
}

GroupRingElement GroupRingElement::from_word(const RingBase& base, const Word& w,
                                             const mpz_class& c) {
    GroupRingElement e(base);
    if (c == 0)
        return e;
    Monomial m;
    if (base.is_group_base()) {
        if (w.rank() != base.rank)
            throw validation_error("word rank does not match ring base rank");
        m = Monomial::from_word(w);
    } else {
        std::vector<std::int64_t> v = w.abelianization();
        for (size_t i = static_cast<size_t>(base.rank); i < v.size(); ++i)
            if (v[i] != 0)
                throw validation_error("word does not fit abelian rank");
        v.resize(static_cast<size_t>(base.rank), 0);
        m = Monomial::from_exponents(v);
    }
    e.terms_[m] = c;
    e.normalize();
    return e;
}

GroupRingElement GroupRingElement::from_exponents(const RingBase& base,
                                                  const std::vector<std::int64_t>& v,
                                                  const mpz_class& c) {
    if (base.kind != BaseKind::free_abelian)
        throw validation_error("exponent monomials require an abelian base");
    if (static_cast<int>(v.size()) != base.rank)
        throw validation_error("exponent vector length does not match abelian rank");
    GroupRingElement e(base);
    if (c != 0)
        e.terms_[Monomial::from_exponents(v)] = c;
    return e;
}

void GroupRingElement::add_term(const Monomial& m, const mpz_class& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (c != 0)
            terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0)
        terms_.erase(it);
}

void GroupRingElement::normalize() {
    if (base_.kind != BaseKind::solvable_quotient || terms_.size() < 2)
        return;
    Budget budget;
    std::vector<std::pair<Monomial, mpz_class>> classes;
    for (const auto& [m, c] : terms_) {
        bool merged = false;
        for (auto& [rep, coef] : classes) {
            if (quotient_words_equal(m.to_word(base_.rank), rep.to_word(base_.rank),
                                     base_.level, budget)) {
                coef += c;
                merged = true;
                break;
            }
        }
        if (!merged)
            classes.emplace_back(m, c);
    }
    terms_.clear();
    for (auto& [rep, coef] : classes)
        if (coef != 0)
            terms_.emplace(rep, coef);
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& rhs) const {
    check_same_base(base_, rhs.base_, "add");
    GroupRingElement out(*this);
    for (const auto& [m, c] : rhs.terms_)
        out.add_term(m, c);
    out.normalize();
    return out;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& rhs) const {
    return *this + (-rhs);
}

GroupRingElement GroupRingElement::operator-() const {
    GroupRingElement out(base_);
    for (const auto& [m, c] : terms_)
        out.terms_.emplace(m, -c);
    return out;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& rhs) const {
    check_same_base(base_, rhs.base_, "mul");
    GroupRingElement out(base_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : rhs.terms_)
            out.add_term(mul_monomials(base_, ma, mb), ca * cb);
    out.normalize();
    return out;
}

GroupRingElement GroupRingElement::scale(const mpz_class& c) const {
    GroupRingElement out(base_);
    if (c == 0)
        return out;
    for (const auto& [m, coef] : terms_)
        out.terms_.emplace(m, coef * c);
    return out;
}

GroupRingElement GroupRingElement::mul_word(const Word& g) const {
    return *this * from_word(base_, g);
}

mpz_class GroupRingElement::augmentation() const {
    mpz_class s = 0;
    for (const auto& [m, c] : terms_)
        s += c;
    return s;
}

GroupRingElement GroupRingElement::involution() const {
    GroupRingElement out(base_);
    for (const auto& [m, c] : terms_)
        out.add_term(invert_monomial(base_, m), c);
    out.normalize();
    return out;
}

bool GroupRingElement::operator==(const GroupRingElement& rhs) const {
    if (!(base_ == rhs.base_))
        return false;
    if (base_.kind == BaseKind::solvable_quotient)
        return (*this - rhs).is_zero();
    return terms_ == rhs.terms_;
}

std::string GroupRingElement::str() const {
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty())
            out += ' ';
        out += (c < 0) ? '-' : '+';
        mpz_class a = abs(c);
        out += a.get_str();
        out += '*';
        out += monomial_str(base_, m);
    }
    return out;
}

GroupHom::GroupHom(RingBase source, RingBase target, std::vector<Monomial> images)
    : source_(source), target_(target), images_(std::move(images)) {
    if (source_.kind != BaseKind::free_group)
        throw validation_error("homomorphisms are defined on free-group sources");
    if (static_cast<int>(images_.size()) != source_.rank)
        throw validation_error("homomorphism needs one image per generator");
}

GroupHom GroupHom::abelianization(int rank) {
    std::vector<Monomial> images;
    for (int i = 1; i <= rank; ++i)
        images.push_back(Monomial{{Syllable{i, 1}}});
    return GroupHom(RingBase::free_group(rank), RingBase::free_abelian(rank),
                    std::move(images));
}

GroupHom GroupHom::identity(int rank) {
    std::vector<Monomial> images;
    for (int i = 1; i <= rank; ++i)
        images.push_back(Monomial{{Syllable{i, 1}}});
    return GroupHom(RingBase::free_group(rank), RingBase::free_group(rank),
                    std::move(images));
}

GroupHom GroupHom::trivial(int rank, const RingBase& target) {
    std::vector<Monomial> images(static_cast<size_t>(rank), Monomial::identity());
    return GroupHom(RingBase::free_group(rank), target, std::move(images));
}

GroupHom GroupHom::to_quotient(int rank, int level) {
    std::vector<Monomial> images;
    for (int i = 1; i <= rank; ++i)
        images.push_back(Monomial{{Syllable{i, 1}}});
    return GroupHom(RingBase::free_group(rank),
                    RingBase::solvable_quotient(rank, level), std::move(images));
}

GroupHom GroupHom::from_word_images(int rank, const RingBase& target,
                                    std::vector<Word> images) {
    if (!target.is_group_base())
        throw validation_error("word images require a group target");
    std::vector<Monomial> ms;
    for (const Word& w : images) {
        if (w.rank() != target.rank)
            throw validation_error("image word rank does not match target");
        ms.push_back(Monomial::from_word(w));
    }
    return GroupHom(RingBase::free_group(rank), target, std::move(ms));
}

GroupHom GroupHom::from_exponent_images(int rank, int m,
                                        std::vector<std::vector<std::int64_t>> images) {
    std::vector<Monomial> ms;
    for (const auto& v : images) {
        if (static_cast<int>(v.size()) != m)
            throw validation_error("image vector length does not match abelian rank");
        ms.push_back(Monomial::from_exponents(v));
    }
    return GroupHom(RingBase::free_group(rank), RingBase::free_abelian(m),
                    std::move(ms));
}

Monomial GroupHom::apply_to_monomial(const Monomial& m) const {
    if (target_.is_group_base())
        return Monomial::from_word(apply_to_word(m.to_word(source_.rank)));
    std::vector<std::int64_t> acc(static_cast<size_t>(target_.rank), 0);
    for (const Syllable& s : m.syl) {
        std::vector<std::int64_t> img =
            images_[static_cast<size_t>(s.gen - 1)].to_exponents(target_.rank);
        for (int i = 0; i < target_.rank; ++i)
            acc[static_cast<size_t>(i)] += s.exp * img[static_cast<size_t>(i)];
    }
    return Monomial::from_exponents(acc);
}

Word GroupHom::apply_to_word(const Word& w) const {
    if (!target_.is_group_base())
        throw validation_error("target of this homomorphism is not a group base");
    Word out(target_.rank);
    for (const Syllable& s : w.syllables()) {
        Word img = images_[static_cast<size_t>(s.gen - 1)].to_word(target_.rank);
        out = out * img.pow(s.exp);
    }
    return out;
}

GroupRingElement apply_hom(const GroupHom& h, const GroupRingElement& e) {
    if (!(e.base() == h.source()))
        throw validation_error("apply_hom: element base does not match source (" +
                               e.base().str() + " vs " + h.source().str() + ")");
    GroupRingElement out(h.target());
    for (const auto& [m, c] : e.terms())
        out.add_term(h.apply_to_monomial(m), c);
    out.normalize();
    return out;
}

GroupRingElement push_to_derived_level(const GroupRingElement& e, int k) {
    if (k < 0)
        throw validation_error("derived level must be nonnegative");
    const RingBase& b = e.base();
    if (b.kind == BaseKind::free_abelian) {
        if (k >= 1)
            return e;
        return GroupRingElement::constant(RingBase::free_abelian(0),
                                          e.augmentation());
    }
    if (b.kind == BaseKind::solvable_quotient && k > b.level)
        throw validation_error("cannot refine a solvable quotient to a deeper level");
    GroupRingElement out(RingBase::solvable_quotient(b.rank, k));
    for (const auto& [m, c] : e.terms())
        out.add_term(m, c);
    out.normalize();
    return out;
}

mpz_class augmentation(const GroupRingElement& e) { return e.augmentation(); }

GroupRingElement involution(const GroupRingElement& e) { return e.involution(); }

bool is_zero(const GroupRingElement& e) { return e.is_zero(); }

} // namespace concord
