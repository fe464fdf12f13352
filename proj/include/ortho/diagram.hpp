#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

namespace ortho {

/// One context (block/clique): an ordered list of mutually exclusive atoms.
/// Order is preserved from the input and fixes canonical output order.
struct Context {
    std::vector<std::string> atoms;
    bool operator==(const Context&) const = default;
};

/// An orthogonality diagram: contexts pasted at shared atoms. Atoms are kept
/// in canonical order (first appearance in the context list). Plain data;
/// structural invariants are reported by validate(), not enforced here.
struct OrthoDiagram {
    std::vector<std::string> atoms;
    std::vector<Context> contexts;
    bool operator==(const OrthoDiagram&) const = default;
};

struct DiagramViolation {
    enum class Kind {
        kEmptyDiagram,
        kContextTooSmall,
        kDuplicateAtomInContext,
        kIntertwiningViolation,  // two contexts share more than one atom
        kIsolatedAtom,
        kUnknownAtom,  // context references an atom missing from the atom list
    };
    Kind kind;
    std::string message;
    std::vector<std::string> atoms;
    std::vector<std::size_t> contexts;
};

/// Assembles a diagram from raw context lists. The atom set is the union over
/// contexts in first-appearance order; `declared_atoms` may add extras (which
/// validate() will flag as isolated unless they occur in a context).
OrthoDiagram make_diagram(const std::vector<std::vector<std::string>>& contexts,
                          const std::vector<std::string>& declared_atoms = {});

/// Every invariant violation, with offending ids; empty iff the diagram is a
/// well-formed pasting.
std::vector<DiagramViolation> validate(const OrthoDiagram& d);

/// Lookup tables shared by the analysis passes. Build once per diagram.
struct DiagramIndex {
    std::unordered_map<std::string, std::size_t> pos;
    std::vector<std::vector<std::size_t>> contexts;   // atom indices per context
    std::vector<std::vector<std::size_t>> neighbors;  // co-contextual atoms, sorted
};

DiagramIndex build_index(const OrthoDiagram& d);

/// True when atoms a and b (canonical indices) occur together in a context.
bool share_context(const DiagramIndex& idx, std::size_t a, std::size_t b);

}  // namespace ortho
