#include "qst/spec.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <set>
#include <sstream>

namespace qst {

namespace {

bool valid_token(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

// "key=value" -> value, else error
std::string kv(const std::string& tok, const std::string& key, int line) {
    auto eq = tok.find('=');
    if (eq == std::string::npos || tok.substr(0, eq) != key)
        throw ParseError(line, "expected " + key + "=<value>, got '" + tok + "'");
    return tok.substr(eq + 1);
}

int parse_int(const std::string& s, int line, const std::string& what, int min_value) {
    try {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("");
        if (v < min_value)
            throw ParseError(line, what + " must be >= " + std::to_string(min_value));
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (...) {
        throw ParseError(line, "bad integer for " + what + ": '" + s + "'");
    }
}

}  // namespace

const TailTemplate* TailSpec::find_template(const std::string& name) const {
    for (const auto& t : templates)
        if (t.name == name) return &t;
    return nullptr;
}

int QuotientSpec::vertex_index(const std::string& id) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].id == id) return static_cast<int>(i);
    return -1;
}

bool QuotientSpec::has_color(const std::string& c) const {
    return std::find(alphabet.begin(), alphabet.end(), c) != alphabet.end();
}

QuotientSpec parse_spec(const std::string& text) {
    QuotientSpec spec;
    spec.degree = 0;
    std::istringstream is(text);
    std::string raw;
    int lineno = 0;
    bool saw_header = false;
    TailSpec* open_tail = nullptr;

    while (std::getline(is, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        bool indented = !line.empty() && (line[0] == ' ' || line[0] == '\t');
        auto toks = split_ws(line);
        if (toks.empty()) continue;

        if (!saw_header) {
            if (toks.size() != 2 || toks[0] != "qst" || toks[1] != "1")
                throw ParseError(lineno, "first line must be 'qst 1'");
            saw_header = true;
            continue;
        }

        const std::string& key = toks[0];
        if (key != "template" && key != "rules") open_tail = nullptr;

        if (key == "degree") {
            if (toks.size() != 2) throw ParseError(lineno, "usage: degree <d>");
            spec.degree = parse_int(toks[1], lineno, "degree", 2);
        } else if (key == "alphabet") {
            if (toks.size() < 2) throw ParseError(lineno, "alphabet needs at least one color");
            for (size_t i = 1; i < toks.size(); ++i) {
                if (!valid_token(toks[i]))
                    throw ParseError(lineno, "bad color name '" + toks[i] + "'");
                if (spec.has_color(toks[i]))
                    throw ParseError(lineno, "duplicate color '" + toks[i] + "'");
                spec.alphabet.push_back(toks[i]);
            }
        } else if (key == "vertex") {
            if (toks.size() != 3) throw ParseError(lineno, "usage: vertex <id> color=<c>");
            FiniteVertex v;
            v.id = toks[1];
            if (!valid_token(v.id)) throw ParseError(lineno, "bad vertex id '" + v.id + "'");
            if (spec.vertex_index(v.id) >= 0)
                throw ParseError(lineno, "duplicate id '" + v.id + "'");
            v.color = kv(toks[2], "color", lineno);
            if (!spec.has_color(v.color))
                throw ParseError(lineno, "unknown color '" + v.color + "'");
            spec.vertices.push_back(std::move(v));
        } else if (key == "edge") {
            if (toks.size() != 5) throw ParseError(lineno, "usage: edge <id1> <id2> <fwd> <bwd>");
            SpecEdge e;
            e.a = toks[1];
            e.b = toks[2];
            for (const auto* id : {&e.a, &e.b})
                if (spec.vertex_index(*id) < 0)
                    throw ParseError(lineno, "unknown vertex reference '" + *id + "'");
            if (e.a == e.b)
                throw ParseError(lineno, "self edge on '" + e.a + "'; declare a loop instead");
            for (const auto& other : spec.edges)
                if ((other.a == e.a && other.b == e.b) || (other.a == e.b && other.b == e.a))
                    throw ParseError(lineno, "duplicate edge " + e.a + " " + e.b);
            e.fwd = parse_int(toks[3], lineno, "edge index", 1);
            e.bwd = parse_int(toks[4], lineno, "edge index", 1);
            spec.edges.push_back(std::move(e));
        } else if (key == "loop") {
            if (toks.size() != 3) throw ParseError(lineno, "usage: loop <id> <k>");
            SpecLoop l;
            l.at = toks[1];
            if (spec.vertex_index(l.at) < 0)
                throw ParseError(lineno, "unknown vertex reference '" + l.at + "'");
            for (const auto& other : spec.loops)
                if (other.at == l.at) throw ParseError(lineno, "duplicate loop on '" + l.at + "'");
            l.index = parse_int(toks[2], lineno, "loop index", 1);
            spec.loops.push_back(std::move(l));
        } else if (key == "tail") {
            if (toks.size() != 5)
                throw ParseError(lineno,
                                 "usage: tail attach=<id> fwd=<k> bwd=<k> kind=periodic|substitution");
            TailSpec t;
            t.attach = kv(toks[1], "attach", lineno);
            if (spec.vertex_index(t.attach) < 0)
                throw ParseError(lineno, "unknown vertex reference '" + t.attach + "'");
            t.attach_fwd = parse_int(kv(toks[2], "fwd", lineno), lineno, "tail fwd", 1);
            t.attach_bwd = parse_int(kv(toks[3], "bwd", lineno), lineno, "tail bwd", 1);
            std::string kind = kv(toks[4], "kind", lineno);
            if (kind == "periodic")
                t.kind = TailKind::Periodic;
            else if (kind == "substitution")
                t.kind = TailKind::Substitution;
            else
                throw ParseError(lineno, "tail kind must be periodic or substitution");
            if (spec.tails.size() >= 2) throw ParseError(lineno, "at most two tails");
            spec.tails.push_back(std::move(t));
            open_tail = &spec.tails.back();
        } else if (key == "template") {
            if (!open_tail || !indented)
                throw ParseError(lineno, "template line outside an open tail block");
            if (toks.size() != 6)
                throw ParseError(lineno,
                                 "usage: template <name> color=<c> loop=<k> fwd=<k> bwd=<k>");
            TailTemplate tt;
            tt.name = toks[1];
            if (!valid_token(tt.name)) throw ParseError(lineno, "bad template name");
            if (open_tail->find_template(tt.name))
                throw ParseError(lineno, "duplicate id '" + tt.name + "'");
            tt.color = kv(toks[2], "color", lineno);
            if (!spec.has_color(tt.color))
                throw ParseError(lineno, "unknown color '" + tt.color + "'");
            tt.loop = parse_int(kv(toks[3], "loop", lineno), lineno, "template loop", 0);
            tt.fwd = parse_int(kv(toks[4], "fwd", lineno), lineno, "template fwd", 1);
            tt.bwd = parse_int(kv(toks[5], "bwd", lineno), lineno, "template bwd", 1);
            open_tail->templates.push_back(std::move(tt));
        } else if (key == "rules") {
            if (!open_tail || !indented)
                throw ParseError(lineno, "rules line outside an open tail block");
            if (open_tail->kind != TailKind::Substitution)
                throw ParseError(lineno, "rules are only valid for substitution tails");
            // rules A->AB,B->A seed A
            if (toks.size() != 4 || toks[2] != "seed")
                throw ParseError(lineno, "usage: rules <A>-><word>,<B>-><word> seed <A>");
            std::string body = toks[1];
            size_t pos = 0;
            while (pos < body.size()) {
                size_t comma = body.find(',', pos);
                std::string one = body.substr(pos, comma == std::string::npos ? std::string::npos
                                                                              : comma - pos);
                size_t arrow = one.find("->");
                if (arrow == std::string::npos)
                    throw ParseError(lineno, "bad rule '" + one + "' (expected <A>-><word>)");
                std::string lhs = one.substr(0, arrow);
                std::string rhs = one.substr(arrow + 2);
                if (lhs.empty() || rhs.empty()) throw ParseError(lineno, "empty rule side");
                std::vector<std::string> word;
                for (char c : rhs) word.emplace_back(1, c);
                open_tail->subst.rules.emplace_back(lhs, std::move(word));
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
            open_tail->subst.seed = toks[3];
        } else {
            throw ParseError(lineno, "unknown key '" + key + "'");
        }
    }
    if (!saw_header) throw ParseError(0, "empty document (missing 'qst 1')");
    try {
        validate_spec(spec);
    } catch (const ParseError&) {
        throw;
    }
    return spec;
}

void validate_spec(const QuotientSpec& spec) {
    if (spec.degree < 2) throw ParseError(0, "degree must be declared and >= 2");
    if (spec.alphabet.empty()) throw ParseError(0, "alphabet must be declared");
    if (spec.vertices.empty())
        throw ParseError(0, "at least one vertex is required (tails attach to finite vertices)");

    const int n = static_cast<int>(spec.vertices.size());
    std::vector<long long> degree_sum(n, 0);
    for (const auto& e : spec.edges) {
        degree_sum[spec.vertex_index(e.a)] += e.fwd;
        degree_sum[spec.vertex_index(e.b)] += e.bwd;
    }
    for (const auto& l : spec.loops) degree_sum[spec.vertex_index(l.at)] += l.index;
    for (const auto& t : spec.tails) degree_sum[spec.vertex_index(t.attach)] += t.attach_fwd;
    for (int i = 0; i < n; ++i) {
        if (degree_sum[i] != spec.degree)
            throw ParseError(0, "degree mismatch at vertex '" + spec.vertices[i].id +
                                    "': index sum " + std::to_string(degree_sum[i]) +
                                    " != " + std::to_string(spec.degree));
    }

    for (const auto& t : spec.tails) {
        if (t.templates.empty())
            throw ParseError(0, "tail at '" + t.attach + "' has no templates");
        const int p = t.period();
        if (t.kind == TailKind::Periodic) {
            if (t.attach_bwd != t.templates[p - 1].bwd)
                throw ParseError(0, "tail at '" + t.attach + "': attach bwd " +
                                        std::to_string(t.attach_bwd) +
                                        " must equal the last template's bwd " +
                                        std::to_string(t.templates[p - 1].bwd));
            for (int a = 0; a < p; ++a) {
                int back = t.templates[(a + p - 1) % p].bwd;
                long long d = t.templates[a].loop + t.templates[a].fwd + back;
                if (d != spec.degree)
                    throw ParseError(0, "degree mismatch at tail template '" +
                                            t.templates[a].name + "': index sum " +
                                            std::to_string(d) +
                                            " != " + std::to_string(spec.degree));
            }
        } else {
            for (const auto& tt : t.templates) {
                if (tt.loop != t.templates[0].loop || tt.fwd != t.templates[0].fwd ||
                    tt.bwd != t.templates[0].bwd)
                    throw ParseError(0,
                                     "substitution tail templates must share one "
                                     "(loop, fwd, bwd) triple");
            }
            if (t.attach_bwd != t.templates[0].bwd)
                throw ParseError(0, "substitution tail: attach bwd must equal the template bwd");
            long long d = t.templates[0].loop + t.templates[0].fwd + t.templates[0].bwd;
            if (d != spec.degree)
                throw ParseError(0, "degree mismatch at substitution tail templates");
            if (t.subst.rules.empty() || t.subst.seed.empty())
                throw ParseError(0, "substitution tail needs rules and a seed");
            if (!t.find_template(t.subst.seed))
                throw ParseError(0, "unknown seed template '" + t.subst.seed + "'");
            std::set<std::string> lhs_seen;
            for (const auto& [lhs, word] : t.subst.rules) {
                if (!t.find_template(lhs))
                    throw ParseError(0, "rule for unknown template '" + lhs + "'");
                if (!lhs_seen.insert(lhs).second)
                    throw ParseError(0, "duplicate rule for '" + lhs + "'");
                for (const auto& sym : word)
                    if (!t.find_template(sym))
                        throw ParseError(0, "rule uses unknown template '" + sym + "'");
            }
        }
    }

    // connectivity of the finite part (tails hang off attach vertices)
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (const auto& e : spec.edges) {
            int a = spec.vertex_index(e.a), b = spec.vertex_index(e.b);
            int w = -1;
            if (a == v) w = b;
            if (b == v) w = a;
            if (w >= 0 && !seen[w]) {
                seen[w] = 1;
                q.push(w);
            }
        }
    }
    for (int i = 0; i < n; ++i)
        if (!seen[i]) throw ParseError(0, "disconnected graph: vertex '" + spec.vertices[i].id +
                                              "' unreachable");

    std::set<std::string> used;
    for (const auto& v : spec.vertices) used.insert(v.color);
    for (const auto& t : spec.tails)
        for (const auto& tt : t.templates) used.insert(tt.color);
    for (const auto& c : spec.alphabet)
        if (!used.count(c)) throw ParseError(0, "unused alphabet color '" + c + "'");
}

std::string serialize_spec(const QuotientSpec& spec) {
    std::ostringstream os;
    os << "qst 1\n";
    os << "degree " << spec.degree << "\n";
    os << "alphabet";
    for (const auto& c : spec.alphabet) os << " " << c;
    os << "\n";
    for (const auto& v : spec.vertices) os << "vertex " << v.id << " color=" << v.color << "\n";
    for (const auto& e : spec.edges)
        os << "edge " << e.a << " " << e.b << " " << e.fwd << " " << e.bwd << "\n";
    for (const auto& l : spec.loops) os << "loop " << l.at << " " << l.index << "\n";
    for (const auto& t : spec.tails) {
        os << "tail attach=" << t.attach << " fwd=" << t.attach_fwd << " bwd=" << t.attach_bwd
           << " kind=" << (t.kind == TailKind::Periodic ? "periodic" : "substitution") << "\n";
        for (const auto& tt : t.templates)
            os << "  template " << tt.name << " color=" << tt.color << " loop=" << tt.loop
               << " fwd=" << tt.fwd << " bwd=" << tt.bwd << "\n";
        if (t.kind == TailKind::Substitution) {
            os << "  rules ";
            bool first = true;
            for (const auto& [lhs, word] : t.subst.rules) {
                if (!first) os << ",";
                first = false;
                os << lhs << "->";
                for (const auto& s : word) os << s;
            }
            os << " seed " << t.subst.seed << "\n";
        }
    }
    return os.str();
}

std::vector<int> substitution_symbols(const TailSpec& tail, int count) {
    std::vector<std::string> cur{tail.subst.seed};
    auto rule_of = [&](const std::string& s) -> const std::vector<std::string>* {
        for (const auto& [lhs, word] : tail.subst.rules)
            if (lhs == s) return &word;
        return nullptr;
    };
    while (static_cast<int>(cur.size()) < count) {
        std::vector<std::string> next;
        for (const auto& s : cur) {
            if (const auto* w = rule_of(s))
                next.insert(next.end(), w->begin(), w->end());
            else
                next.push_back(s);  // missing rule: symbol is fixed
        }
        if (next.size() <= cur.size())
            throw ParseError(0, "substitution rules cannot produce " + std::to_string(count) +
                                    " symbols from seed '" + tail.subst.seed + "'");
        cur = std::move(next);
    }
    std::vector<int> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        const auto& name = cur[i];
        for (int j = 0; j < tail.period(); ++j)
            if (tail.templates[j].name == name) {
                out.push_back(j);
                break;
            }
    }
    return out;
}

QuotientSpec shift_tails(const QuotientSpec& spec, int k) {
    if (k <= 0) return spec;
    QuotientSpec out = spec;
    out.tails.clear();
    for (size_t ti = 0; ti < spec.tails.size(); ++ti) {
        const TailSpec& t = spec.tails[ti];
        if (t.kind != TailKind::Periodic)
            throw Error("shift_tails: periodic tails only");
        const int p = t.period();
        std::string prev = t.attach;
        int prev_fwd = t.attach_fwd;
        int prev_bwd = t.attach_bwd;
        for (int j = 0; j < k; ++j) {
            const TailTemplate& tt = t.templates[j % p];
            std::string id = "t" + std::to_string(ti) + "_" + std::to_string(j);
            out.vertices.push_back({id, tt.color});
            out.edges.push_back({prev, id, prev_fwd, prev_bwd});
            if (tt.loop > 0) out.loops.push_back({id, tt.loop});
            prev = id;
            prev_fwd = tt.fwd;
            prev_bwd = tt.bwd;
        }
        TailSpec nt;
        nt.attach = prev;
        nt.attach_fwd = prev_fwd;
        nt.attach_bwd = prev_bwd;
        nt.kind = TailKind::Periodic;
        for (int j = 0; j < p; ++j) nt.templates.push_back(t.templates[(k + j) % p]);
        out.tails.push_back(std::move(nt));
    }
    validate_spec(out);
    return out;
}

}  // namespace qst
