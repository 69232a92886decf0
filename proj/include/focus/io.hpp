#ifndef FOCUS_IO_HPP
#define FOCUS_IO_HPP

#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "focus/instance.hpp"

// Line-oriented instance files:
//   n <int>            k <int>           len <int>          h <int>
//   variant <focus|springy|focusw|focuswh>
//   yc <lo> <hi>       zc <lo> <hi>      (zc required iff weighted variant)
//   x <lo> <hi>        (exactly n lines, in variable order)
//   among <s> <e> <lo> <hi>   (zero or more)
// Blank lines and lines starting with '#' are ignored on parse; the canonical
// serialization emits keys in the order above without comments.

namespace focus {

struct AmongSpec {
    int s = 0;  // window [s, e], inclusive
    int e = 0;
    int lo = 0; // bounds on how many window variables take a value > k
    int hi = 0;

    friend bool operator==(const AmongSpec&, const AmongSpec&) = default;
};

struct ParsedInstance {
    FocusInstance inst;
    std::vector<AmongSpec> amongs;
};

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail_io {

inline int to_int(const std::string& tok, int line_no) {
    size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ": expected integer, got '" + tok + "'");
    }
    if (pos != tok.size())
        throw ParseError("line " + std::to_string(line_no) + ": trailing junk in '" + tok + "'");
    return v;
}

} // namespace detail_io

inline ParsedInstance parse_instance(std::istream& in) {
    using detail_io::to_int;
    std::map<std::string, std::vector<int>> scalars;
    std::optional<Variant> variant;
    std::vector<IntInterval> xs;
    std::vector<AmongSpec> amongs;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key) || key[0] == '#') continue;
        std::vector<std::string> args;
        std::string tok;
        while (ls >> tok) args.push_back(tok);

        auto want = [&](size_t cnt) {
            if (args.size() != cnt)
                throw ParseError("line " + std::to_string(line_no) + ": '" + key + "' takes " +
                                 std::to_string(cnt) + " argument(s)");
        };
        if (key == "n" || key == "k" || key == "len" || key == "h") {
            want(1);
            if (scalars.count(key))
                throw ParseError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
            scalars[key] = {to_int(args[0], line_no)};
        } else if (key == "yc" || key == "zc") {
            want(2);
            if (scalars.count(key))
                throw ParseError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
            scalars[key] = {to_int(args[0], line_no), to_int(args[1], line_no)};
        } else if (key == "variant") {
            want(1);
            if (variant)
                throw ParseError("line " + std::to_string(line_no) + ": duplicate key 'variant'");
            if (args[0] == "focus") variant = Variant::Focus;
            else if (args[0] == "springy") variant = Variant::Springy;
            else if (args[0] == "focusw") variant = Variant::Weighted;
            else if (args[0] == "focuswh") variant = Variant::WeightedSpringy;
            else throw ParseError("line " + std::to_string(line_no) + ": unknown variant '" + args[0] + "'");
        } else if (key == "x") {
            want(2);
            xs.push_back({to_int(args[0], line_no), to_int(args[1], line_no)});
            if (xs.back().is_empty())
                throw ParseError("line " + std::to_string(line_no) + ": empty x domain");
        } else if (key == "among") {
            want(4);
            amongs.push_back({to_int(args[0], line_no), to_int(args[1], line_no),
                              to_int(args[2], line_no), to_int(args[3], line_no)});
        } else {
            throw ParseError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
    }

    for (const char* req : {"n", "k", "len", "h", "yc"})
        if (!scalars.count(req)) throw ParseError(std::string("missing key '") + req + "'");
    if (!variant) throw ParseError("missing key 'variant'");

    ParsedInstance out;
    out.inst.params.k = scalars["k"][0];
    out.inst.params.len = scalars["len"][0];
    out.inst.params.h = scalars["h"][0];
    out.inst.params.variant = *variant;
    const int n = scalars["n"][0];
    if (n < 1) throw ParseError("n must be at least 1");
    if (static_cast<int>(xs.size()) != n)
        throw ParseError("expected " + std::to_string(n) + " x lines, found " +
                         std::to_string(xs.size()));
    out.inst.xs = std::move(xs);
    out.inst.yc = {scalars["yc"][0], scalars["yc"][1]};
    if (is_weighted(*variant)) {
        if (!scalars.count("zc")) throw ParseError("weighted variant needs a zc line");
        out.inst.zc = IntInterval{scalars["zc"][0], scalars["zc"][1]};
    } else if (scalars.count("zc")) {
        throw ParseError("zc line only applies to weighted variants");
    }
    for (const auto& a : amongs) {
        if (a.s < 0 || a.e >= n || a.s > a.e)
            throw ParseError("among window out of range");
        if (a.lo < 0 || a.lo > a.hi || a.hi > a.e - a.s + 1)
            throw ParseError("among bounds out of range");
    }
    out.amongs = std::move(amongs);
    try {
        out.inst.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    return out;
}

inline ParsedInstance parse_instance(const std::string& text) {
    std::istringstream in(text);
    return parse_instance(in);
}

inline std::string serialize_instance(const FocusInstance& inst,
                                      const std::vector<AmongSpec>& amongs = {}) {
    std::ostringstream os;
    os << "n " << inst.n() << "\n";
    os << "k " << inst.params.k << "\n";
    os << "len " << inst.params.len << "\n";
    os << "h " << inst.params.h << "\n";
    os << "variant " << variant_name(inst.params.variant) << "\n";
    os << "yc " << inst.yc.lo << " " << inst.yc.hi << "\n";
    if (inst.zc) os << "zc " << inst.zc->lo << " " << inst.zc->hi << "\n";
    for (const auto& x : inst.xs) os << "x " << x.lo << " " << x.hi << "\n";
    for (const auto& a : amongs)
        os << "among " << a.s << " " << a.e << " " << a.lo << " " << a.hi << "\n";
    return os.str();
}

} // namespace focus

#endif
