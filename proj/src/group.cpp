#include "qcolor/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "qcolor/nt.hpp"

namespace qcolor {

namespace {

constexpr uint64_t kMaxEnumeration = 10'000'000;

uint64_t factorial(uint32_t n) {
    uint64_t r = 1;
    for (uint32_t i = 2; i <= n; ++i) r *= i;
    return r;
}

void skip_ws(std::string_view s, size_t& pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

int64_t parse_int(std::string_view s, size_t& pos, const char* what) {
    skip_ws(s, pos);
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    int64_t value = 0;
    auto res = std::from_chars(s.data() + start, s.data() + pos, value);
    if (res.ec != std::errc{} || res.ptr != s.data() + pos || pos == start) {
        throw ParseError(std::string("expected an integer in ") + what);
    }
    return value;
}

void expect(std::string_view s, size_t& pos, char c, const char* what) {
    skip_ws(s, pos);
    if (pos >= s.size() || s[pos] != c) {
        throw ParseError(std::string("expected '") + c + "' in " + what);
    }
    ++pos;
}

} // namespace

Permutation::Permutation(std::vector<uint8_t> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (uint8_t v : image_) {
        if (v >= image_.size() || seen[v]) throw ParseError("permutation image is not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(uint32_t n) {
    std::vector<uint8_t> img(n);
    for (uint32_t i = 0; i < n; ++i) img[i] = static_cast<uint8_t>(i);
    return Permutation(std::move(img));
}

Permutation compose(const Permutation& f, const Permutation& g) {
    if (f.degree() != g.degree()) throw MismatchError("group mismatch");
    std::vector<uint8_t> img(f.degree());
    for (uint32_t i = 0; i < f.degree(); ++i) img[i] = g.map(f.map(static_cast<uint8_t>(i)));
    return Permutation(std::move(img));
}

Permutation inverse_of(const Permutation& f) {
    std::vector<uint8_t> img(f.degree());
    for (uint32_t i = 0; i < f.degree(); ++i) img[f.map(static_cast<uint8_t>(i))] = static_cast<uint8_t>(i);
    return Permutation(std::move(img));
}

DihedralWord compose(const DihedralWord& a, const DihedralWord& b) {
    if (a.ngon != b.ngon) throw MismatchError("group mismatch");
    uint32_t n = a.ngon;
    DihedralWord r;
    r.ngon = n;
    r.reflect = a.reflect ^ b.reflect;
    // r^k s = s r^{-k}, so the left rotation flips sign when b reflects
    r.rot = b.reflect ? (b.rot + n - a.rot % n) % n : (a.rot + b.rot) % n;
    return r;
}

DihedralWord inverse_of(const DihedralWord& a) {
    if (a.reflect) return a; // reflections are involutions
    return DihedralWord{0, a.rot == 0 ? 0 : a.ngon - a.rot, a.ngon};
}

Matrix2 mul(const Matrix2& a, const Matrix2& b) {
    return Matrix2{a.e00 * b.e00 + a.e01 * b.e10, a.e00 * b.e01 + a.e01 * b.e11,
                   a.e10 * b.e00 + a.e11 * b.e10, a.e10 * b.e01 + a.e11 * b.e11};
}

FieldElement det(const Matrix2& a) {
    return a.e00 * a.e11 - a.e01 * a.e10;
}

Matrix2 inverse_of(const Matrix2& a) {
    FieldElement di = det(a).inverse();
    return Matrix2{a.e11 * di, -a.e01 * di, -a.e10 * di, a.e00 * di};
}

Matrix2 matrix_identity(uint32_t q) {
    return Matrix2{FieldElement(1, q), FieldElement(0, q), FieldElement(0, q), FieldElement(1, q)};
}

Matrix2 matrix_power(const Matrix2& a, uint64_t e) {
    Matrix2 acc = matrix_identity(a.e00.modulus());
    Matrix2 base = a;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

bool is_scalar(const Matrix2& a) {
    return a.e01.is_zero() && a.e10.is_zero() && a.e00 == a.e11;
}

GroupContext::GroupContext(GroupFamily family, uint32_t param) : family_(family), param_(param) {
    switch (family_) {
    case GroupFamily::Symmetric:
        if (param_ < 1 || param_ > 20) throw ParseError("symmetric degree must be in 1..20");
        break;
    case GroupFamily::Dihedral:
        if (param_ < 1 || param_ > 1'000'000) throw ParseError("dihedral parameter must be in 1..1000000");
        break;
    case GroupFamily::GL2:
    case GroupFamily::SL2:
        if (param_ > 1000 || !is_prime(param_)) throw ParseError("matrix field size must be a prime <= 1000");
        break;
    }
}

GroupContext GroupContext::parse(std::string_view descriptor) {
    size_t colon = descriptor.find(':');
    if (colon == std::string_view::npos) throw ParseError("group descriptor must look like S:3, D:6, GL2:5 or SL2:7");
    std::string_view tag = descriptor.substr(0, colon);
    std::string_view num = descriptor.substr(colon + 1);
    size_t pos = 0;
    int64_t v = parse_int(num, pos, "group descriptor");
    skip_ws(num, pos);
    if (pos != num.size() || v < 1) throw ParseError("bad group parameter");
    GroupFamily fam;
    if (tag == "S") fam = GroupFamily::Symmetric;
    else if (tag == "D") fam = GroupFamily::Dihedral;
    else if (tag == "GL2") fam = GroupFamily::GL2;
    else if (tag == "SL2") fam = GroupFamily::SL2;
    else throw ParseError("unknown group family: " + std::string(tag));
    return GroupContext(fam, static_cast<uint32_t>(v));
}

std::string family_tag(GroupFamily f) {
    switch (f) {
    case GroupFamily::Symmetric: return "S";
    case GroupFamily::Dihedral: return "D";
    case GroupFamily::GL2: return "GL2";
    case GroupFamily::SL2: return "SL2";
    }
    return "?";
}

std::string GroupContext::descriptor() const {
    return family_tag(family_) + ":" + std::to_string(param_);
}

uint64_t GroupContext::order() const {
    uint64_t q = param_;
    switch (family_) {
    case GroupFamily::Symmetric: return factorial(param_);
    case GroupFamily::Dihedral: return 2 * q;
    case GroupFamily::GL2: return (q * q - 1) * (q * q - q);
    case GroupFamily::SL2: return q * (q * q - 1);
    }
    return 0;
}

GroupElement GroupContext::identity() const {
    switch (family_) {
    case GroupFamily::Symmetric: return Permutation::identity(param_);
    case GroupFamily::Dihedral: return DihedralWord{0, 0, param_};
    case GroupFamily::GL2:
    case GroupFamily::SL2: return matrix_identity(param_);
    }
    throw Error("unreachable");
}

bool GroupContext::compatible(const GroupElement& a) const {
    switch (family_) {
    case GroupFamily::Symmetric: {
        auto* p = std::get_if<Permutation>(&a);
        return p && p->degree() == param_;
    }
    case GroupFamily::Dihedral: {
        auto* d = std::get_if<DihedralWord>(&a);
        return d && d->ngon == param_ && d->rot < param_ && d->reflect <= 1;
    }
    case GroupFamily::GL2:
    case GroupFamily::SL2: {
        auto* m = std::get_if<Matrix2>(&a);
        return m && m->e00.modulus() == param_ && m->e01.modulus() == param_ &&
               m->e10.modulus() == param_ && m->e11.modulus() == param_;
    }
    }
    return false;
}

void GroupContext::require_compatible(const GroupElement& a) const {
    if (!compatible(a)) throw MismatchError("group mismatch");
}

void GroupContext::require_member(const GroupElement& a) const {
    require_compatible(a);
    if (family_ == GroupFamily::GL2) {
        if (det(std::get<Matrix2>(a)).is_zero()) throw MismatchError("group mismatch: singular matrix");
    } else if (family_ == GroupFamily::SL2) {
        if (det(std::get<Matrix2>(a)).value() != 1) throw MismatchError("group mismatch: determinant is not 1");
    }
}

GroupElement GroupContext::mul(const GroupElement& a, const GroupElement& b) const {
    require_compatible(a);
    require_compatible(b);
    switch (family_) {
    case GroupFamily::Symmetric:
        return compose(std::get<Permutation>(a), std::get<Permutation>(b));
    case GroupFamily::Dihedral:
        return compose(std::get<DihedralWord>(a), std::get<DihedralWord>(b));
    case GroupFamily::GL2:
    case GroupFamily::SL2:
        return qcolor::mul(std::get<Matrix2>(a), std::get<Matrix2>(b));
    }
    throw Error("unreachable");
}

GroupElement GroupContext::inverse(const GroupElement& a) const {
    require_compatible(a);
    switch (family_) {
    case GroupFamily::Symmetric: return inverse_of(std::get<Permutation>(a));
    case GroupFamily::Dihedral: return inverse_of(std::get<DihedralWord>(a));
    case GroupFamily::GL2:
    case GroupFamily::SL2: return inverse_of(std::get<Matrix2>(a));
    }
    throw Error("unreachable");
}

GroupElement GroupContext::power(const GroupElement& a, uint64_t e) const {
    require_compatible(a);
    GroupElement acc = identity();
    GroupElement base = a;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

bool GroupContext::is_identity(const GroupElement& a) const {
    require_compatible(a);
    return a == identity();
}

std::vector<GroupElement> GroupContext::elements() const {
    if (order() > kMaxEnumeration) {
        throw SearchInfeasibleError("search infeasible: group too large to enumerate");
    }
    std::vector<GroupElement> out;
    out.reserve(order());
    switch (family_) {
    case GroupFamily::Symmetric: {
        std::vector<uint8_t> img(param_);
        for (uint32_t i = 0; i < param_; ++i) img[i] = static_cast<uint8_t>(i);
        do {
            out.emplace_back(Permutation(img));
        } while (std::next_permutation(img.begin(), img.end()));
        break;
    }
    case GroupFamily::Dihedral:
        for (uint8_t t = 0; t <= 1; ++t) {
            for (uint32_t k = 0; k < param_; ++k) out.emplace_back(DihedralWord{t, k, param_});
        }
        break;
    case GroupFamily::GL2:
    case GroupFamily::SL2: {
        uint32_t q = param_;
        bool sl = family_ == GroupFamily::SL2;
        for (uint32_t a = 0; a < q; ++a)
            for (uint32_t b = 0; b < q; ++b)
                for (uint32_t c = 0; c < q; ++c)
                    for (uint32_t d = 0; d < q; ++d) {
                        uint64_t dv = (uint64_t{a} * d % q + q - uint64_t{b} * c % q) % q;
                        if (sl ? dv == 1 : dv != 0) {
                            out.emplace_back(Matrix2{FieldElement(a, q), FieldElement(b, q),
                                                     FieldElement(c, q), FieldElement(d, q)});
                        }
                    }
        break;
    }
    }
    return out;
}

uint64_t GroupContext::element_key(const GroupElement& a) const {
    require_compatible(a);
    switch (family_) {
    case GroupFamily::Symmetric: {
        // Lehmer rank of the image vector
        const auto& img = std::get<Permutation>(a).image();
        uint64_t rank = 0;
        for (size_t i = 0; i < img.size(); ++i) {
            uint32_t smaller = 0;
            for (size_t j = i + 1; j < img.size(); ++j) smaller += img[j] < img[i];
            rank = rank * (img.size() - i) + smaller;
        }
        return rank;
    }
    case GroupFamily::Dihedral: {
        const auto& d = std::get<DihedralWord>(a);
        return uint64_t{d.reflect} * param_ + d.rot;
    }
    case GroupFamily::GL2:
    case GroupFamily::SL2: {
        const auto& m = std::get<Matrix2>(a);
        uint64_t q = param_;
        return ((uint64_t{m.e00.value()} * q + m.e01.value()) * q + m.e10.value()) * q + m.e11.value();
    }
    }
    return 0;
}

std::string GroupContext::format(const GroupElement& a) const {
    require_compatible(a);
    switch (family_) {
    case GroupFamily::Symmetric: {
        const auto& p = std::get<Permutation>(a);
        std::ostringstream os;
        std::vector<bool> done(p.degree(), false);
        bool any = false;
        for (uint32_t i = 0; i < p.degree(); ++i) {
            if (done[i] || p.map(static_cast<uint8_t>(i)) == i) continue;
            any = true;
            os << '(';
            uint8_t j = static_cast<uint8_t>(i);
            bool first = true;
            do {
                if (!first) os << ' ';
                os << static_cast<int>(j) + 1;
                done[j] = true;
                j = p.map(j);
                first = false;
            } while (j != i);
            os << ')';
        }
        if (!any) return "()";
        return os.str();
    }
    case GroupFamily::Dihedral: {
        const auto& d = std::get<DihedralWord>(a);
        return "s^" + std::to_string(int(d.reflect)) + " r^" + std::to_string(d.rot);
    }
    case GroupFamily::GL2:
    case GroupFamily::SL2: {
        const auto& m = std::get<Matrix2>(a);
        std::ostringstream os;
        os << "[[" << m.e00.value() << ',' << m.e01.value() << "],[" << m.e10.value() << ','
           << m.e11.value() << "]]";
        return os.str();
    }
    }
    throw Error("unreachable");
}

GroupElement GroupContext::parse_element(std::string_view text) const {
    size_t pos = 0;
    switch (family_) {
    case GroupFamily::Symmetric: {
        uint32_t n = param_;
        std::vector<uint8_t> img(n);
        std::vector<bool> moved(n, false);
        for (uint32_t i = 0; i < n; ++i) img[i] = static_cast<uint8_t>(i);
        skip_ws(text, pos);
        while (pos < text.size()) {
            expect(text, pos, '(', "cycle notation");
            std::vector<uint8_t> cycle;
            skip_ws(text, pos);
            while (pos < text.size() && text[pos] != ')') {
                int64_t v = parse_int(text, pos, "cycle notation");
                if (v < 1 || v > n) throw ParseError("cycle entry out of range");
                uint8_t z = static_cast<uint8_t>(v - 1);
                if (moved[z]) throw ParseError("cycles must be disjoint");
                moved[z] = true;
                cycle.push_back(z);
                skip_ws(text, pos);
            }
            expect(text, pos, ')', "cycle notation");
            for (size_t i = 0; i + 1 < cycle.size(); ++i) img[cycle[i]] = cycle[i + 1];
            if (cycle.size() > 1) img[cycle.back()] = cycle.front();
            skip_ws(text, pos);
        }
        GroupElement e = Permutation(std::move(img));
        require_member(e);
        return e;
    }
    case GroupFamily::Dihedral: {
        DihedralWord d{0, 0, param_};
        skip_ws(text, pos);
        if (pos < text.size() && (text[pos] == '1' || text[pos] == 'e') &&
            [&] { size_t p2 = pos + 1; skip_ws(text, p2); return p2 == text.size(); }()) {
            return d;
        }
        if (pos < text.size() && text[pos] == 's') {
            ++pos;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                int64_t t = parse_int(text, pos, "dihedral word");
                if (t < 0 || t > 1) throw ParseError("reflection exponent must be 0 or 1");
                d.reflect = static_cast<uint8_t>(t);
            } else {
                d.reflect = 1;
            }
            skip_ws(text, pos);
        }
        if (pos < text.size() && text[pos] == 'r') {
            ++pos;
            int64_t k = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                k = parse_int(text, pos, "dihedral word");
            }
            k %= static_cast<int64_t>(param_);
            if (k < 0) k += param_;
            d.rot = static_cast<uint32_t>(k);
            skip_ws(text, pos);
        }
        if (pos != text.size()) throw ParseError("bad dihedral word");
        GroupElement e = d;
        require_member(e);
        return e;
    }
    case GroupFamily::GL2:
    case GroupFamily::SL2: {
        uint32_t q = param_;
        expect(text, pos, '[', "matrix literal");
        auto parse_row = [&](FieldElement& x, FieldElement& y) {
            expect(text, pos, '[', "matrix literal");
            x = FieldElement(parse_int(text, pos, "matrix literal"), q);
            expect(text, pos, ',', "matrix literal");
            y = FieldElement(parse_int(text, pos, "matrix literal"), q);
            expect(text, pos, ']', "matrix literal");
        };
        Matrix2 m = matrix_identity(q);
        parse_row(m.e00, m.e01);
        expect(text, pos, ',', "matrix literal");
        parse_row(m.e10, m.e11);
        expect(text, pos, ']', "matrix literal");
        skip_ws(text, pos);
        if (pos != text.size()) throw ParseError("bad matrix literal");
        GroupElement e = m;
        require_member(e);
        return e;
    }
    }
    throw Error("unreachable");
}

} // namespace qcolor
