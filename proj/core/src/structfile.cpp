#include "jetgeom/structfile.hpp"
#include "jetgeom/error.hpp"
#include "jetgeom/parser.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace jetgeom {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

bool looks_like_tuple(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!(c == ',' || (c >= '0' && c <= '9'))) return false;
    return true;
}

IdxTuple parse_tuple(const std::string& s, std::size_t off, std::size_t dim_bound) {
    IdxTuple t;
    std::size_t p = 0;
    while (p < s.size()) {
        std::size_t q = s.find(',', p);
        std::string piece = s.substr(p, q == std::string::npos ? q : q - p);
        if (piece.empty()) throw ParseError("empty index in component key", off);
        t.push_back(std::stoi(piece));
        if (t.back() < 0 || (std::size_t)t.back() >= dim_bound)
            throw ParseError("index out of range in component key: " + piece, off);
        p = q == std::string::npos ? s.size() : q + 1;
    }
    return t;
}

struct RawLine {
    std::string key, value;
    std::size_t offset;
};

struct RawSection {
    std::string name;
    std::size_t offset = 0;
    std::map<std::string, RawLine> settings;  // kind, chart, angles, degree, rank
    std::vector<RawLine> components;
};

int int_setting(const RawSection& s, const std::string& key, int fallback) {
    auto it = s.settings.find(key);
    if (it == s.settings.end()) return fallback;
    try {
        return std::stoi(it->second.value);
    } catch (const std::exception&) {
        throw ParseError("malformed integer for '" + key + "'", it->second.offset);
    }
}

// Split a component key into an optional part word and an index tuple.
std::pair<std::string, std::string> split_key(const std::string& key, std::size_t off) {
    std::vector<std::string> words = split_ws(key);
    if (words.size() == 1) {
        if (looks_like_tuple(words[0])) return {"", words[0]};
        return {words[0], ""};
    }
    if (words.size() == 2 && !looks_like_tuple(words[0]) && looks_like_tuple(words[1]))
        return {words[0], words[1]};
    throw ParseError("malformed component key: " + key, off);
}

StructObject build_object(const RawSection& sec) {
    auto need = [&](const std::string& key) -> const RawLine& {
        auto it = sec.settings.find(key);
        if (it == sec.settings.end())
            throw ParseError("object '" + sec.name + "' is missing '" + key + "'", sec.offset);
        return it->second;
    };
    const std::string kind = need("kind").value;
    std::vector<std::string> coords = split_ws(need("chart").value);
    std::vector<std::string> angles;
    if (auto it = sec.settings.find("angles"); it != sec.settings.end())
        angles = split_ws(it->second.value);
    ChartPtr ch = Chart::make(coords, angles);
    std::size_t dim = ch->dim();

    StructObject obj;
    obj.name = sec.name;
    obj.kind = kind;
    obj.chart = ch;

    struct Comp {
        std::string part;
        IdxTuple idx;
        ScalarExpr e;
        std::size_t offset;
    };
    int rank = int_setting(sec, "rank", 0);
    std::size_t bound = kind == "algebroid" ? std::max<std::size_t>(dim, (std::size_t)rank) : dim;
    std::vector<Comp> comps;
    for (const RawLine& rl : sec.components) {
        auto [part, idx] = split_key(rl.key, rl.offset);
        ScalarExpr e = parse(rl.value, ch);
        comps.push_back({part, parse_tuple(idx, rl.offset, bound), std::move(e), rl.offset});
    }
    auto expect = [&](const Comp& c, const std::string& part, std::size_t arity) {
        if (c.part != part || c.idx.size() != arity)
            throw ParseError("component key '" + c.part + "' does not fit kind '" + kind + "'",
                             c.offset);
    };

    if (kind == "bivector") {
        Multivector p(ch, 2);
        for (const Comp& c : comps) {
            expect(c, "", 2);
            p.add(c.idx, c.e);
        }
        obj.value = std::move(p);
    } else if (kind == "form") {
        int deg = int_setting(sec, "degree", 1);
        DiffForm w(ch, deg);
        for (const Comp& c : comps) {
            expect(c, "", (std::size_t)deg);
            w.add(c.idx, c.e);
        }
        obj.value = std::move(w);
    } else if (kind == "multiderivation") {
        int deg = int_setting(sec, "degree", 2);
        Multivector lam(ch, deg), e(ch, deg - 1);
        for (const Comp& c : comps) {
            if (c.part == "lambda") {
                expect(c, "lambda", (std::size_t)deg);
                lam.add(c.idx, c.e);
            } else {
                expect(c, "e", (std::size_t)(deg - 1));
                e.add(c.idx, c.e);
            }
        }
        obj.value = MultiDerivation::make(std::move(lam), std::move(e));
    } else if (kind == "tensor11") {
        Tensor11 t = Tensor11::zero(ch);
        for (const Comp& c : comps) {
            expect(c, "", 2);
            t.m[c.idx[0]][c.idx[1]] += c.e;
        }
        obj.value = std::move(t);
    } else if (kind == "endo-dl") {
        Tensor11 n = Tensor11::zero(ch);
        Multivector y(ch, 1);
        DiffForm gamma(ch, 1);
        ScalarExpr g = ScalarExpr::zero(ch);
        for (const Comp& c : comps) {
            if (c.part == "n") {
                expect(c, "n", 2);
                n.m[c.idx[0]][c.idx[1]] += c.e;
            } else if (c.part == "y") {
                expect(c, "y", 1);
                y.add(c.idx, c.e);
            } else if (c.part == "gamma") {
                expect(c, "gamma", 1);
                gamma.add(c.idx, c.e);
            } else {
                expect(c, "g", 0);
                g += c.e;
            }
        }
        obj.value = EndoDL::make(std::move(n), std::move(y), std::move(gamma), std::move(g));
    } else if (kind == "genblock") {
        Tensor11 phi = Tensor11::zero(ch);
        Multivector pi(ch, 2);
        DiffForm omega(ch, 2);
        for (const Comp& c : comps) {
            if (c.part == "phi") {
                expect(c, "phi", 2);
                phi.m[c.idx[0]][c.idx[1]] += c.e;
            } else if (c.part == "pi") {
                expect(c, "pi", 2);
                pi.add(c.idx, c.e);
            } else {
                expect(c, "omega", 2);
                omega.add(c.idx, c.e);
            }
        }
        obj.value = GenBlockTangent::make(std::move(phi), std::move(pi), std::move(omega));
    } else if (kind == "algebroid") {
        if (rank <= 0) throw ParseError("algebroid needs a positive 'rank'", sec.offset);
        std::vector<Multivector> anchor(rank, Multivector::zero(ch, 1));
        std::vector<std::vector<std::vector<ScalarExpr>>> c(
            rank, std::vector<std::vector<ScalarExpr>>(
                      rank, std::vector<ScalarExpr>(rank, ScalarExpr::zero(ch))));
        for (const Comp& cm : comps) {
            if (cm.part == "anchor") {
                expect(cm, "anchor", 2);
                if (cm.idx[0] >= rank || (std::size_t)cm.idx[1] >= dim)
                    throw ParseError("anchor index out of range", cm.offset);
                anchor[cm.idx[0]].add({cm.idx[1]}, cm.e);
            } else {
                expect(cm, "c", 3);
                for (int v : cm.idx)
                    if (v >= rank) throw ParseError("frame index out of range", cm.offset);
                c[cm.idx[0]][cm.idx[1]][cm.idx[2]] += cm.e;
                c[cm.idx[1]][cm.idx[0]][cm.idx[2]] += -cm.e;
            }
        }
        obj.value = AlgebroidData::make(ch, std::move(anchor), std::move(c));
    } else {
        throw ParseError("unknown kind: " + kind, need("kind").offset);
    }
    return obj;
}

std::string tuple_str(const IdxTuple& t) {
    std::string s;
    for (std::size_t k = 0; k < t.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(t[k]);
    }
    return s;
}

void write_skew_components(std::ostream& out, const std::string& part,
                           const std::map<IdxTuple, ScalarExpr>& comps) {
    for (const auto& [t, e] : comps) {
        if (e.is_zero()) continue;
        out << part;
        if (!part.empty() && !t.empty()) out << " ";
        out << tuple_str(t);
        if (part.empty() && t.empty()) out << ".";  // unreachable for supported kinds
        out << " = " << e.str() << "\n";
    }
}

void write_matrix_components(std::ostream& out, const std::string& part,
                             const std::vector<std::vector<ScalarExpr>>& m) {
    for (std::size_t a = 0; a < m.size(); ++a)
        for (std::size_t b = 0; b < m[a].size(); ++b) {
            if (m[a][b].is_zero()) continue;
            out << part << (part.empty() ? "" : " ") << a << "," << b << " = "
                << m[a][b].str() << "\n";
        }
}

} // namespace

std::vector<StructObject> read_structfile(const std::string& text) {
    std::vector<RawSection> sections;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string::npos) eol = text.size();
        std::string line = trim(text.substr(pos, eol - pos));
        std::size_t off = pos;
        if (!line.empty() && line[0] != '#') {
            if (line.front() == '[') {
                if (line.back() != ']' || line.size() < 3)
                    throw ParseError("malformed section header", off);
                sections.push_back({});
                sections.back().name = trim(line.substr(1, line.size() - 2));
                sections.back().offset = off;
            } else {
                std::size_t eq = line.find('=');
                if (eq == std::string::npos)
                    throw ParseError("expected 'key = value'", off);
                if (sections.empty())
                    throw ParseError("component line before any [section]", off);
                RawLine rl{trim(line.substr(0, eq)), trim(line.substr(eq + 1)), off};
                if (rl.key.empty()) throw ParseError("empty key", off);
                if (rl.key == "kind" || rl.key == "chart" || rl.key == "angles" ||
                    rl.key == "degree" || rl.key == "rank") {
                    if (!sections.back().settings.emplace(rl.key, rl).second)
                        throw ParseError("duplicate '" + rl.key + "'", off);
                } else {
                    sections.back().components.push_back(std::move(rl));
                }
            }
        }
        if (eol == text.size()) break;
        pos = eol + 1;
    }
    std::vector<StructObject> out;
    out.reserve(sections.size());
    for (const RawSection& s : sections) out.push_back(build_object(s));
    return out;
}

std::vector<StructObject> read_structfile_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return read_structfile(buf.str());
    } catch (ParseError& e) {
        throw ParseError(path + ": " + e.what(), e.offset);
    }
}

std::string write_structfile(const std::vector<StructObject>& objects) {
    std::ostringstream out;
    bool first = true;
    for (const StructObject& o : objects) {
        if (!first) out << "\n";
        first = false;
        out << "[" << o.name << "]\n";
        out << "kind = " << o.kind << "\n";
        out << "chart =";
        for (const auto& c : o.chart->coords()) out << " " << c;
        out << "\n";
        std::string angles;
        for (std::size_t ci = 0; ci < o.chart->dim(); ++ci)
            if (o.chart->is_angle(ci)) angles += " " + o.chart->coords()[ci];
        if (!angles.empty()) out << "angles =" << angles << "\n";

        if (std::holds_alternative<Multivector>(o.value)) {
            write_skew_components(out, "", std::get<Multivector>(o.value).comps);
        } else if (std::holds_alternative<DiffForm>(o.value)) {
            const DiffForm& w = std::get<DiffForm>(o.value);
            if (w.degree != 1) out << "degree = " << w.degree << "\n";
            write_skew_components(out, "", w.comps);
        } else if (std::holds_alternative<MultiDerivation>(o.value)) {
            const MultiDerivation& j = std::get<MultiDerivation>(o.value);
            if (j.degree != 2) out << "degree = " << j.degree << "\n";
            write_skew_components(out, "lambda", j.lambda.comps);
            write_skew_components(out, "e", j.e.comps);
        } else if (std::holds_alternative<Tensor11>(o.value)) {
            write_matrix_components(out, "", std::get<Tensor11>(o.value).m);
        } else if (std::holds_alternative<EndoDL>(o.value)) {
            const EndoDL& p = std::get<EndoDL>(o.value);
            write_matrix_components(out, "n", p.n.m);
            write_skew_components(out, "y", p.y.comps);
            write_skew_components(out, "gamma", p.gamma.comps);
            if (!p.g.is_zero()) out << "g = " << p.g.str() << "\n";
        } else if (std::holds_alternative<GenBlockTangent>(o.value)) {
            const GenBlockTangent& b = std::get<GenBlockTangent>(o.value);
            write_matrix_components(out, "phi", b.phi.m);
            write_skew_components(out, "pi", b.pi.comps);
            write_skew_components(out, "omega", b.omega.comps);
        } else {
            const AlgebroidData& a = std::get<AlgebroidData>(o.value);
            out << "rank = " << a.rank << "\n";
            for (int col = 0; col < a.rank; ++col)
                for (const auto& [t, e] : a.anchor[col].comps) {
                    if (e.is_zero()) continue;
                    out << "anchor " << col << "," << t[0] << " = " << e.str() << "\n";
                }
            for (int p = 0; p < a.rank; ++p)
                for (int q = p + 1; q < a.rank; ++q)
                    for (int k = 0; k < a.rank; ++k)
                        if (!a.c[p][q][k].is_zero())
                            out << "c " << p << "," << q << "," << k << " = "
                                << a.c[p][q][k].str() << "\n";
        }
    }
    return out.str();
}

} // namespace jetgeom
