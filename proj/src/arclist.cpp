#include "hcaudit/arclist.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>
#include <vector>

#include "hcaudit/errors.hpp"

namespace hcaudit {

namespace {

struct Line {
    int number;  // 1-based position in the input
    std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> lines;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view raw = (nl == std::string_view::npos)
                                   ? text.substr(pos)
                                   : text.substr(pos, nl - pos);
        ++number;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        lines.push_back({number, raw});
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    return lines;
}

bool is_blank(std::string_view s) {
    return s.find_first_not_of(" \t") == std::string_view::npos;
}

std::vector<std::string_view> tokens(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
        if (i > start) out.push_back(s.substr(start, i - start));
    }
    return out;
}

int parse_int(std::string_view tok, int line) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw Error(Errc::MalformedHeader, "expected an integer, got '" + std::string(tok) + "'",
                    line);
    }
    return value;
}

struct Builder {
    int n = -1;
    int declared_m = -1;
    std::vector<Arc> arcs;
    std::unordered_set<long long> seen;

    void header(int n_in, int m_in, int line) {
        if (n_in < 0 || m_in < 0) {
            throw Error(Errc::MalformedHeader, "negative counts in header", line);
        }
        n = n_in;
        declared_m = m_in;
        arcs.reserve(static_cast<std::size_t>(m_in));
    }

    void arc(int u1, int v1, int line) {
        if (n < 0) throw Error(Errc::MalformedHeader, "arc line before header", line);
        if (static_cast<int>(arcs.size()) >= declared_m) {
            throw Error(Errc::MalformedHeader,
                        "more arc lines than the declared " + std::to_string(declared_m), line);
        }
        if (u1 < 1 || u1 > n || v1 < 1 || v1 > n) {
            throw Error(Errc::VertexOutOfRange,
                        "vertex outside [1, " + std::to_string(n) + "]", line);
        }
        const int u = u1 - 1;
        const int v = v1 - 1;
        if (u == v) throw Error(Errc::SelfLoop, "self-loop", line);
        if (!seen.insert(static_cast<long long>(u) * n + v).second) {
            throw Error(Errc::DuplicateArc, "duplicate arc", line);
        }
        arcs.emplace_back(u, v);
    }

    Digraph finish(int last_line) {
        if (n < 0) throw Error(Errc::MalformedHeader, "missing header", 1);
        if (static_cast<int>(arcs.size()) != declared_m) {
            throw Error(Errc::MalformedHeader,
                        "header declares " + std::to_string(declared_m) + " arcs but " +
                            std::to_string(arcs.size()) + " were given",
                        last_line);
        }
        return Digraph(n, std::move(arcs));
    }
};

Digraph parse_plain(const std::vector<Line>& lines) {
    Builder b;
    int last = 1;
    for (const Line& ln : lines) {
        last = ln.number;
        if (is_blank(ln.text) || ln.text.front() == '#') continue;
        const auto toks = tokens(ln.text);
        if (toks.size() != 2) {
            throw Error(Errc::MalformedHeader, "expected two integers", ln.number);
        }
        const int a = parse_int(toks[0], ln.number);
        const int c = parse_int(toks[1], ln.number);
        if (b.n < 0) {
            b.header(a, c, ln.number);
        } else {
            b.arc(a, c, ln.number);
        }
    }
    return b.finish(last);
}

Digraph parse_dimacs(const std::vector<Line>& lines) {
    Builder b;
    int last = 1;
    for (const Line& ln : lines) {
        last = ln.number;
        if (is_blank(ln.text) || ln.text.front() == '#') continue;
        const auto toks = tokens(ln.text);
        if (toks[0] == "c") continue;
        if (toks[0] == "p") {
            // "p <format> n m": take the trailing two integer tokens.
            if (toks.size() < 3) {
                throw Error(Errc::MalformedHeader, "short problem line", ln.number);
            }
            b.header(parse_int(toks[toks.size() - 2], ln.number),
                     parse_int(toks[toks.size() - 1], ln.number), ln.number);
        } else if (toks[0] == "a" || toks[0] == "e") {
            if (toks.size() != 3) {
                throw Error(Errc::MalformedHeader, "expected 'a u v'", ln.number);
            }
            b.arc(parse_int(toks[1], ln.number), parse_int(toks[2], ln.number), ln.number);
        } else {
            throw Error(Errc::MalformedHeader,
                        "unknown line type '" + std::string(toks[0]) + "'", ln.number);
        }
    }
    return b.finish(last);
}

}  // namespace

Digraph parse_arclist(std::string_view text) {
    const auto lines = split_lines(text);
    for (const Line& ln : lines) {
        if (is_blank(ln.text) || ln.text.front() == '#') continue;
        const auto toks = tokens(ln.text);
        if (!toks.empty() && (toks[0] == "c" || toks[0] == "p" || toks[0] == "a")) {
            return parse_dimacs(lines);
        }
        break;
    }
    return parse_plain(lines);
}

std::string emit_arclist(const Digraph& d) {
    std::ostringstream out;
    out << d.vertex_count() << ' ' << d.arc_count() << '\n';
    for (const auto& [u, v] : d.arcs()) {
        out << (u + 1) << ' ' << (v + 1) << '\n';
    }
    return out.str();
}

Digraph read_arclist_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::MalformedHeader, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_arclist(buf.str());
}

void write_arclist_file(const Digraph& d, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Errc::MalformedHeader, "cannot open '" + path + "' for writing");
    out << emit_arclist(d);
}

}  // namespace hcaudit
