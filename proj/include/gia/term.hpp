#pragma once

#include <memory>
#include <string>
#include <vector>

namespace gia {

/// Term over a signature: variable, constant reference, or operation
/// application. Shared immutable nodes; the catalog builds them once.
struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
    enum class Kind { Variable, Constant, Apply };
    Kind kind;
    std::string name;
    std::vector<TermPtr> args;
};

TermPtr var(std::string name);
TermPtr cst(std::string name);
TermPtr app(std::string op, std::vector<TermPtr> args);

bool term_equal(const TermPtr& a, const TermPtr& b);

/// Collects distinct variable names in sorted (alphabetical) order.
std::vector<std::string> term_variables(const TermPtr& t);

/// Renders a term: binary applications infix "(a op b)", others "op(a,...)".
std::string term_to_string(const TermPtr& t);

} // namespace gia
