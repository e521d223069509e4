#include "gia/term.hpp"

#include <algorithm>
#include <set>

namespace gia {

TermPtr var(std::string name) {
    return std::make_shared<Term>(Term{Term::Kind::Variable, std::move(name), {}});
}

TermPtr cst(std::string name) {
    return std::make_shared<Term>(Term{Term::Kind::Constant, std::move(name), {}});
}

TermPtr app(std::string op, std::vector<TermPtr> args) {
    return std::make_shared<Term>(Term{Term::Kind::Apply, std::move(op), std::move(args)});
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind || a->name != b->name || a->args.size() != b->args.size()) return false;
    for (std::size_t i = 0; i < a->args.size(); ++i)
        if (!term_equal(a->args[i], b->args[i])) return false;
    return true;
}

static void collect_vars(const TermPtr& t, std::set<std::string>& out) {
    if (t->kind == Term::Kind::Variable) out.insert(t->name);
    for (const auto& a : t->args) collect_vars(a, out);
}

std::vector<std::string> term_variables(const TermPtr& t) {
    std::set<std::string> s;
    collect_vars(t, s);
    return {s.begin(), s.end()};
}

std::string term_to_string(const TermPtr& t) {
    switch (t->kind) {
    case Term::Kind::Variable:
    case Term::Kind::Constant:
        return t->name;
    case Term::Kind::Apply:
        if (t->args.size() == 2)
            return "(" + term_to_string(t->args[0]) + " " + t->name + " " + term_to_string(t->args[1]) + ")";
        if (t->args.size() == 1) return t->name + "(" + term_to_string(t->args[0]) + ")";
        {
            std::string s = t->name + "(";
            for (std::size_t i = 0; i < t->args.size(); ++i) {
                if (i) s += ", ";
                s += term_to_string(t->args[i]);
            }
            return s + ")";
        }
    }
    return "?";
}

} // namespace gia
