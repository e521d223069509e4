#include "gia/builtins.hpp"

namespace gia {

namespace {

FiniteAlgebra make_t4() {
    FiniteAlgebra a;
    a.name = "T4";
    a.size = 4;
    a.labels = {"0", "a", "b", "1"};
    a.constants["one"] = 3;
    a.tables["succ"] = {2,
                        {3, 3, 3, 3,   // 0 succ _
                         1, 3, 2, 3,   // a succ _
                         2, 1, 3, 3,   // b succ _
                         0, 1, 2, 3}}; // 1 succ _
    a.tables["neg"] = {1, {3, 1, 2, 0}};
    return a;
}

FiniteAlgebra make_t4_modal() {
    FiniteAlgebra a;
    a.name = "T4_modal";
    a.size = 4;
    a.labels = {"0", "a", "b", "1"};
    a.constants["one"] = 3;
    a.tables["join"] = {2,
                        {0, 1, 2, 3,
                         1, 1, 3, 3,
                         2, 3, 2, 3,
                         3, 3, 3, 3}};
    a.tables["meet"] = {2,
                        {0, 0, 0, 0,
                         0, 1, 0, 1,
                         0, 0, 2, 2,
                         0, 1, 2, 3}};
    a.tables["neg"] = {1, {3, 1, 2, 0}};
    a.tables["nabla"] = {1, {0, 3, 3, 3}};
    return a;
}

FiniteAlgebra make_chain(int n) {
    if (n < 1) throw Error("chain: parameter must be >= 1");
    FiniteAlgebra a;
    a.name = "C" + std::to_string(n + 1);
    a.size = n + 1;
    a.labels.reserve(static_cast<std::size_t>(n + 1));
    a.labels.push_back("0");
    for (int i = 1; i < n; ++i)
        a.labels.push_back(std::to_string(i) + "/" + std::to_string(n));
    a.labels.push_back("1");
    a.constants["one"] = n;
    OpTable t{2, {}};
    t.cells.reserve(static_cast<std::size_t>((n + 1) * (n + 1)));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            t.cells.push_back(std::min(n, n - i + j));
    a.tables["succ"] = std::move(t);
    return a;
}

FiniteAlgebra make_example_2_7() {
    FiniteAlgebra a;
    a.name = "example_2_7";
    a.size = 5;
    a.labels = {"0", "a", "b", "c", "1"};
    a.constants["one"] = 4;
    a.tables["succ"] = {2,
                        {4, 4, 4, 4, 4,
                         1, 4, 2, 3, 4,
                         2, 1, 4, 3, 4,
                         3, 1, 2, 4, 4,
                         0, 1, 2, 3, 4}};
    return a;
}

FiniteAlgebra make_boolean2() {
    FiniteAlgebra a;
    a.name = "boolean2";
    a.size = 2;
    a.labels = {"0", "1"};
    a.constants["one"] = 1;
    a.constants["zero"] = 0;
    a.tables["succ"] = {2, {1, 1, 0, 1}};
    a.tables["neg"] = {1, {1, 0}};
    return a;
}

} // namespace

FiniteAlgebra make_builtin(const std::string& which, std::optional<int> param) {
    FiniteAlgebra a;
    if (which == "T4")
        a = make_t4();
    else if (which == "T4_modal")
        a = make_t4_modal();
    else if (which == "chain")
        a = make_chain(param.value_or(-1));
    else if (which == "example_2_7")
        a = make_example_2_7();
    else if (which == "boolean2")
        a = make_boolean2();
    else
        throw Error("unknown builtin algebra '" + which + "'");
    a.validate();
    return a;
}

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = {"T4", "T4_modal", "chain", "example_2_7", "boolean2"};
    return names;
}

} // namespace gia
