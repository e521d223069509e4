#include "gia/conjecture.hpp"

namespace gia {

Conjecture parse_conjecture(const std::string& id) {
    if (id == "G35-in-G40") return {id, "G4_0", std::nullopt, "G'35"};
    if (id == "DG-implies-printed-G27") return {id, "DG0", std::nullopt, "G27-as-printed"};

    // generic "<law-id>-in-<system-id>", splitting at the last "-in-"
    std::size_t at = id.rfind("-in-");
    if (at == std::string::npos || at == 0)
        throw Error("unknown conjecture '" + id + "' (expected <law-id>-in-<system-id>)");
    std::string law = id.substr(0, at);
    std::string system = id.substr(at + 4);
    if (!law_exists(law)) throw Error("conjecture '" + id + "': unknown law '" + law + "'");
    std::optional<int> param;
    // allow "...-in-Gn+1:3" for the parameterized family
    std::size_t colon = system.rfind(':');
    if (colon != std::string::npos) {
        param = std::stoi(system.substr(colon + 1));
        system = system.substr(0, colon);
    }
    ResolvedSystem sys = get_system(system, param); // validates
    return {id, sys.def->id, param, law};
}

ConjectureReport check_conjecture(const std::string& conjecture_id, int max_size,
                                  std::uint64_t node_budget, int jobs) {
    if (max_size < 1) throw Error("check_conjecture: max_size must be >= 1");
    Conjecture c = parse_conjecture(conjecture_id);
    const Law& law = law_by_id(c.law_id);

    ConjectureReport rep;
    rep.conjecture = c;
    rep.max_size = max_size;

    for (int size = 1; size <= max_size; ++size) {
        EnumerationTask task;
        task.system_id = c.base_system;
        task.param = c.base_param;
        task.size = size;
        task.node_budget = node_budget;
        task.jobs = jobs;
        EnumerationResult r = enumerate_models(task);
        rep.sizes.push_back({size, static_cast<std::uint64_t>(r.models.size())});
        for (const FiniteAlgebra& m : r.models) {
            const FiniteAlgebra* target = &m;
            FiniteAlgebra resolved;
            if (law_mentions_constant(law, "zero") && !m.binds_constant("zero")) {
                auto rz = with_resolved_zero(m);
                if (!rz) continue; // law not applicable without a least element
                resolved = std::move(*rz);
                target = &resolved;
            }
            if (LawResult w = check_law(*target, law)) {
                rep.counterexample = m;
                rep.counterexample_witness = std::move(*w);
                return rep;
            }
        }
    }
    return rep;
}

} // namespace gia
