#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mirrormap/models.hpp"
#include "mirrormap/operator.hpp"

namespace mirrormap {

// Reference data as printed in the source tables, kept verbatim for the
// --compare-printed diagnostics. Where a printed entry is known to disagree
// with the exact computation, the computation wins and the comparison is
// reported, never silently reconciled.
struct PrintedRefs {
    std::optional<RecurrenceSpec> op;        // printed operator (integer-scaled)
    std::optional<std::pair<Poly, Poly>> w_closed_form;  // printed W_{3,0} = num/den in z
    std::vector<Rat> kq_head;                // printed K_q coefficients from q^0
    std::vector<Rat> n_head;                 // printed n_1..n_5
    std::optional<Rat> mu;                   // printed mu (two-term rows)
    std::vector<Rat> alpha;                  // printed alpha (two-term rows)
    std::optional<Rat> w0;                   // printed W(0)
    std::string family;                      // model family label
};

struct CatalogEntry {
    ModelSpec model;
    PrintedRefs printed;
};

// Every named model: the 13 one-parameter rows, the two-parameter P2xP2
// system, and the diagonal product models.
const std::vector<CatalogEntry>& catalog();

const CatalogEntry* catalog_find(const std::string& key);
std::vector<std::string> catalog_keys();

}  // namespace mirrormap
