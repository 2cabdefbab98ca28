#include "cylkit/fitkit.hpp"

#include <charconv>
#include <numeric>
#include <sstream>

namespace cylkit {

int CwComposition::width() const { return std::accumulate(gaps.begin(), gaps.end(), 0) + rank() + (gaps.empty() ? offset : 0); }

CwComposition to_composition(const Profile& p) {
    CwComposition c;
    const int h = p.width();
    std::vector<int> downs;
    for (int j = 0; j < h; ++j)
        if (p.delta[static_cast<std::size_t>(j)] == -1) downs.push_back(j);
    if (downs.empty()) {
        c.offset = h;
        return c;
    }
    c.offset = downs.front();
    for (std::size_t i = 0; i < downs.size(); ++i) {
        const int next = i + 1 < downs.size() ? downs[i + 1] : downs.front() + h;
        c.gaps.push_back(next - downs[i] - 1);
    }
    return c;
}

Profile from_composition(const CwComposition& c) {
    for (int g : c.gaps)
        if (g < 0) throw Error("composition gaps must be nonnegative");
    if (c.gaps.empty()) {
        if (c.offset <= 0) throw Error("a composition without -1 entries needs a positive width");
        return Profile(std::vector<int>(static_cast<std::size_t>(c.offset), 1));
    }
    const int h = c.width();
    if (c.offset < 0 || c.offset > c.gaps.back()) throw Error("composition offset must lie in the wrapped final gap");
    std::vector<int> d(static_cast<std::size_t>(h), 1);
    int pos = c.offset;
    for (int g : c.gaps) {
        d[static_cast<std::size_t>(pos % h)] = -1;
        pos += g + 1;
    }
    return Profile(std::move(d));
}

std::string to_string(const CwComposition& c) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < c.gaps.size(); ++i) os << (i ? "," : "") << c.gaps[i];
    os << "]@" << c.offset;
    return os.str();
}

CwComposition parse_composition(std::string_view text) {
    auto fail = [&] { return Error("malformed composition '" + std::string(text) + "' (expected [g1,g2,...]@offset)"); };
    const auto at = text.find('@');
    if (text.empty() || text.front() != '[' || at == std::string_view::npos || at < 1 || text[at - 1] != ']') throw fail();
    CwComposition c;
    std::string_view body = text.substr(1, at - 2);
    while (!body.empty()) {
        auto comma = body.find(',');
        std::string_view item = body.substr(0, comma);
        int v = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec != std::errc() || ptr != item.data() + item.size()) throw fail();
        c.gaps.push_back(v);
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
        if (body.empty()) throw fail();
    }
    std::string_view off = text.substr(at + 1);
    auto [ptr, ec] = std::from_chars(off.data(), off.data() + off.size(), c.offset);
    if (ec != std::errc() || ptr != off.data() + off.size()) throw fail();
    from_composition(c);  // validates
    return c;
}

} // namespace cylkit
