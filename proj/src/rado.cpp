#include "isophase/rado.hpp"

#include "isophase/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace isophase {

HereditarilyFiniteSet::HereditarilyFiniteSet(std::vector<HereditarilyFiniteSet> members)
    : members_(std::move(members))
{
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool HereditarilyFiniteSet::contains(const HereditarilyFiniteSet& x) const
{
    return std::binary_search(members_.begin(), members_.end(), x);
}

int HereditarilyFiniteSet::depth() const
{
    int d = 0;
    for (const auto& m : members_)
        d = std::max(d, 1 + m.depth());
    return d;
}

HereditarilyFiniteSet HereditarilyFiniteSet::von_neumann(std::uint32_t k)
{
    std::vector<HereditarilyFiniteSet> ordinals;
    ordinals.reserve(k);
    for (std::uint32_t i = 0; i < k; ++i)
        ordinals.push_back(HereditarilyFiniteSet(ordinals));
    return HereditarilyFiniteSet(std::move(ordinals));
}

// The code of a exceeds that of b iff the largest member of the symmetric
// difference lies in a. Members are sorted ascending, so scan from the top.
std::strong_ordering operator<=>(const HereditarilyFiniteSet& a, const HereditarilyFiniteSet& b)
{
    auto i = a.members_.rbegin();
    auto j = b.members_.rbegin();
    for (; i != a.members_.rend() && j != b.members_.rend(); ++i, ++j) {
        const auto c = *i <=> *j;
        if (c != 0)
            return c;
    }
    if (i != a.members_.rend())
        return std::strong_ordering::greater;
    if (j != b.members_.rend())
        return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

bool operator==(const HereditarilyFiniteSet& a, const HereditarilyFiniteSet& b)
{
    return (a <=> b) == 0;
}

std::string to_string(const HereditarilyFiniteSet& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.members().size(); ++i) {
        if (i)
            out += ',';
        out += to_string(s.members()[i]);
    }
    return out + "}";
}

namespace {

struct SetParser {
    std::string_view text;
    std::size_t pos = 0;

    void skip()
    {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    void expect(char c)
    {
        skip();
        if (pos >= text.size() || text[pos] != c)
            throw ParseError(std::string("expected '") + c + "' at offset " + std::to_string(pos));
        ++pos;
    }

    HereditarilyFiniteSet parse(int level)
    {
        if (level > 64)
            throw ParseError("set nesting too deep");
        expect('{');
        std::vector<HereditarilyFiniteSet> members;
        skip();
        if (pos < text.size() && text[pos] == '}') {
            ++pos;
            return {};
        }
        while (true) {
            members.push_back(parse(level + 1));
            skip();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            expect('}');
            return HereditarilyFiniteSet(std::move(members));
        }
    }
};

bool bit_of(const BigInt& value, const BigInt& index)
{
    if (value == 0 || index > BigInt(boost::multiprecision::msb(value)))
        return false;
    return boost::multiprecision::bit_test(value, static_cast<unsigned>(index));
}

} // namespace

HereditarilyFiniteSet parse_hf_set(std::string_view text)
{
    SetParser p{text};
    auto s = p.parse(0);
    p.skip();
    if (p.pos != text.size())
        throw ParseError("trailing characters after set");
    return s;
}

bool bit_adjacent(std::uint64_t a, std::uint64_t b)
{
    if (a == b)
        throw DomainError("bit_adjacent: a vertex is not adjacent to itself");
    const bool a_in_b = a < 64 && (b >> a & 1u);
    const bool b_in_a = b < 64 && (a >> b & 1u);
    return a_in_b || b_in_a;
}

bool bit_adjacent(const BigInt& a, const BigInt& b)
{
    if (a < 0 || b < 0)
        throw DomainError("bit_adjacent: naturals only");
    if (a == b)
        throw DomainError("bit_adjacent: a vertex is not adjacent to itself");
    return bit_of(b, a) || bit_of(a, b);
}

namespace {

BigInt encode_checked(const HereditarilyFiniteSet& s)
{
    BigInt code = 0;
    for (const auto& m : s.members()) {
        const BigInt e = encode_checked(m);
        if (e >= BigInt(kMaxEncodeExponent))
            throw ScaleError("ackermann_encode: member code too large to exponentiate");
        boost::multiprecision::bit_set(code, static_cast<unsigned>(e));
    }
    return code;
}

} // namespace

BigInt ackermann_encode(const HereditarilyFiniteSet& s)
{
    if (s.depth() > kMaxEncodeDepth)
        throw ScaleError("ackermann_encode: depth exceeds " + std::to_string(kMaxEncodeDepth));
    return encode_checked(s);
}

HereditarilyFiniteSet ackermann_decode(const BigInt& n)
{
    if (n < 0)
        throw DomainError("ackermann_decode: naturals only");
    std::vector<HereditarilyFiniteSet> members;
    if (n > 0) {
        const auto top = boost::multiprecision::msb(n);
        for (unsigned i = 0; i <= top; ++i)
            if (boost::multiprecision::bit_test(n, i))
                members.push_back(ackermann_decode(BigInt(i)));
    }
    return HereditarilyFiniteSet(std::move(members));
}

BigInt extension_witness(const std::vector<std::uint64_t>& u_set, const std::vector<std::uint64_t>& v_set)
{
    const std::set<std::uint64_t> u(u_set.begin(), u_set.end());
    const std::set<std::uint64_t> v(v_set.begin(), v_set.end());
    for (auto x : u)
        if (v.count(x))
            throw DomainError("extension_witness: sets overlap at " + std::to_string(x));
    std::uint64_t k = 0;
    if (!u.empty())
        k = std::max(k, *u.rbegin() + 1);
    if (!v.empty())
        k = std::max(k, *v.rbegin() + 1);
    if (k >= kMaxEncodeExponent)
        throw ScaleError("extension_witness: vertex labels too large");
    BigInt z = 0;
    for (auto x : u)
        boost::multiprecision::bit_set(z, static_cast<unsigned>(x));
    boost::multiprecision::bit_set(z, static_cast<unsigned>(k));
    return z;
}

} // namespace isophase
