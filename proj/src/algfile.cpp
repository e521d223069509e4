#include "gia/algfile.hpp"

#include <fstream>
#include <sstream>

namespace gia {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::string clean = line;
    std::size_t hash = clean.find('#');
    if (hash != std::string::npos) clean.resize(hash);
    std::istringstream is(clean);
    std::vector<std::string> toks;
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

} // namespace

std::vector<FiniteAlgebra> parse_algebras(std::istream& in) {
    std::vector<FiniteAlgebra> out;
    FiniteAlgebra cur;
    bool open = false;
    bool have_size = false;
    std::string line;
    int lineno = 0;

    auto label_index = [&](const std::string& lbl, int ln) {
        int idx = cur.label_index(lbl);
        if (idx < 0) throw ParseError(ln, "unknown element label '" + lbl + "'");
        return idx;
    };

    while (std::getline(in, line)) {
        ++lineno;
        std::vector<std::string> toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0];

        if (kw == "algebra") {
            if (open) throw ParseError(lineno, "missing 'end' before new algebra");
            if (toks.size() != 2) throw ParseError(lineno, "expected: algebra <name>");
            cur = FiniteAlgebra{};
            cur.name = toks[1];
            open = true;
            have_size = false;
            continue;
        }
        if (!open) throw ParseError(lineno, "expected 'algebra <name>'");

        if (kw == "size") {
            if (toks.size() != 2) throw ParseError(lineno, "expected: size <n>");
            try {
                cur.size = std::stoi(toks[1]);
            } catch (...) {
                throw ParseError(lineno, "bad size '" + toks[1] + "'");
            }
            if (cur.size < 1) throw ParseError(lineno, "size must be positive");
            have_size = true;
        } else if (kw == "elements") {
            if (!have_size) throw ParseError(lineno, "'size' must precede 'elements'");
            if (static_cast<int>(toks.size()) != cur.size + 1)
                throw ParseError(lineno, "expected " + std::to_string(cur.size) + " element labels");
            cur.labels.assign(toks.begin() + 1, toks.end());
        } else if (kw == "const") {
            if (toks.size() != 4 || toks[2] != "=")
                throw ParseError(lineno, "expected: const <sym> = <lbl>");
            if (cur.labels.empty()) throw ParseError(lineno, "'elements' must precede 'const'");
            if (cur.binds_constant(toks[1]) || cur.binds_op(toks[1]))
                throw ParseError(lineno, "duplicate symbol '" + toks[1] + "'");
            cur.constants[toks[1]] = label_index(toks[3], lineno);
        } else if (kw == "op") {
            if (toks.size() < 3 || toks[2] != "=")
                throw ParseError(lineno, "expected: op <sym>/<arity> = <entries>");
            if (cur.labels.empty()) throw ParseError(lineno, "'elements' must precede 'op'");
            std::size_t slash = toks[1].find('/');
            if (slash == std::string::npos) throw ParseError(lineno, "expected <sym>/<arity>");
            std::string sym = toks[1].substr(0, slash);
            int arity = 0;
            try {
                arity = std::stoi(toks[1].substr(slash + 1));
            } catch (...) {
                throw ParseError(lineno, "bad arity in '" + toks[1] + "'");
            }
            if (arity < 1) throw ParseError(lineno, "arity must be >= 1");
            if (cur.binds_constant(sym) || cur.binds_op(sym))
                throw ParseError(lineno, "duplicate symbol '" + sym + "'");
            std::size_t want = table_length(cur.size, arity);
            if (toks.size() - 3 != want)
                throw ParseError(lineno, "expected " + std::to_string(want) + " entries for '" + sym +
                                             "', got " + std::to_string(toks.size() - 3));
            OpTable t{arity, {}};
            t.cells.reserve(want);
            for (std::size_t i = 3; i < toks.size(); ++i) t.cells.push_back(label_index(toks[i], lineno));
            cur.tables[sym] = std::move(t);
        } else if (kw == "end") {
            if (toks.size() != 1) throw ParseError(lineno, "unexpected tokens after 'end'");
            if (cur.labels.empty()) throw ParseError(lineno, "algebra has no elements");
            try {
                cur.validate();
            } catch (const Error& e) {
                throw ParseError(lineno, e.what());
            }
            out.push_back(std::move(cur));
            open = false;
        } else {
            throw ParseError(lineno, "unknown directive '" + kw + "'");
        }
    }
    if (open) throw ParseError(lineno, "missing 'end'");
    return out;
}

std::vector<FiniteAlgebra> parse_algebras_string(const std::string& text) {
    std::istringstream is(text);
    return parse_algebras(is);
}

std::vector<FiniteAlgebra> parse_algebras_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return parse_algebras(in);
}

std::string serialize_algebra(const FiniteAlgebra& alg) {
    std::ostringstream os;
    os << "algebra " << alg.name << "\n";
    os << "size " << alg.size << "\n";
    os << "elements";
    for (const auto& l : alg.labels) os << " " << l;
    os << "\n";
    for (const auto& [sym, idx] : alg.constants)
        os << "const " << sym << " = " << alg.label(idx) << "\n";
    for (const auto& [sym, t] : alg.tables) {
        os << "op " << sym << "/" << t.arity << " =";
        for (int v : t.cells) os << " " << alg.label(v);
        os << "\n";
    }
    os << "end\n";
    return os.str();
}

} // namespace gia
