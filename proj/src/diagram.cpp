#include "ortho/diagram.hpp"

#include <algorithm>
#include <set>

namespace ortho {

OrthoDiagram make_diagram(const std::vector<std::vector<std::string>>& contexts,
                          const std::vector<std::string>& declared_atoms) {
    OrthoDiagram d;
    std::unordered_map<std::string, std::size_t> seen;
    auto add_atom = [&](const std::string& id) {
        if (seen.emplace(id, d.atoms.size()).second) d.atoms.push_back(id);
    };
    for (const auto& ctx : contexts) {
        for (const auto& id : ctx) add_atom(id);
        d.contexts.push_back(Context{ctx});
    }
    for (const auto& id : declared_atoms) add_atom(id);
    return d;
}

std::vector<DiagramViolation> validate(const OrthoDiagram& d) {
    using Kind = DiagramViolation::Kind;
    std::vector<DiagramViolation> out;

    if (d.contexts.empty()) {
        out.push_back({Kind::kEmptyDiagram, "diagram has no contexts", {}, {}});
        return out;
    }

    std::set<std::string> known(d.atoms.begin(), d.atoms.end());
    std::set<std::string> used;

    for (std::size_t ci = 0; ci < d.contexts.size(); ++ci) {
        const auto& atoms = d.contexts[ci].atoms;
        if (atoms.size() < 2) {
            out.push_back({Kind::kContextTooSmall,
                           "context " + std::to_string(ci + 1) + " has fewer than 2 atoms",
                           atoms,
                           {ci}});
        }
        std::set<std::string> in_ctx;
        for (const auto& id : atoms) {
            used.insert(id);
            if (!known.count(id)) {
                out.push_back({Kind::kUnknownAtom,
                               "context " + std::to_string(ci + 1) +
                                   " references undeclared atom '" + id + "'",
                               {id},
                               {ci}});
            }
            if (!in_ctx.insert(id).second) {
                out.push_back({Kind::kDuplicateAtomInContext,
                               "atom '" + id + "' appears twice in context " +
                                   std::to_string(ci + 1),
                               {id},
                               {ci}});
            }
        }
    }

    for (std::size_t i = 0; i < d.contexts.size(); ++i) {
        std::set<std::string> a(d.contexts[i].atoms.begin(), d.contexts[i].atoms.end());
        for (std::size_t j = i + 1; j < d.contexts.size(); ++j) {
            std::vector<std::string> shared;
            for (const auto& id : d.contexts[j].atoms) {
                if (a.count(id)) shared.push_back(id);
            }
            if (shared.size() > 1) {
                out.push_back({Kind::kIntertwiningViolation,
                               "intertwining violation: contexts " + std::to_string(i + 1) +
                                   " and " + std::to_string(j + 1) + " share " +
                                   std::to_string(shared.size()) + " atoms",
                               shared,
                               {i, j}});
            }
        }
    }

    for (const auto& id : d.atoms) {
        if (!used.count(id)) {
            out.push_back({Kind::kIsolatedAtom,
                           "atom '" + id + "' occurs in no context",
                           {id},
                           {}});
        }
    }
    return out;
}

DiagramIndex build_index(const OrthoDiagram& d) {
    DiagramIndex idx;
    for (std::size_t i = 0; i < d.atoms.size(); ++i) idx.pos[d.atoms[i]] = i;
    idx.contexts.reserve(d.contexts.size());
    idx.neighbors.assign(d.atoms.size(), {});
    for (const auto& ctx : d.contexts) {
        std::vector<std::size_t> ids;
        ids.reserve(ctx.atoms.size());
        for (const auto& id : ctx.atoms) ids.push_back(idx.pos.at(id));
        for (std::size_t a : ids) {
            for (std::size_t b : ids) {
                if (a != b) idx.neighbors[a].push_back(b);
            }
        }
        idx.contexts.push_back(std::move(ids));
    }
    for (auto& nb : idx.neighbors) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    return idx;
}

bool share_context(const DiagramIndex& idx, std::size_t a, std::size_t b) {
    const auto& nb = idx.neighbors[a];
    return std::binary_search(nb.begin(), nb.end(), b);
}

}  // namespace ortho
