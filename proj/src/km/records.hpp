#ifndef KEDL_SRC_KM_RECORDS_HPP
#define KEDL_SRC_KM_RECORDS_HPP

#include <vector>

#include "kedl/km.hpp"

namespace kedl::detail {

// Invariants a record can violate on its own, without looking at others.
std::vector<KmViolation> record_violations(const KnowledgeElement& e);

}  // namespace kedl::detail

#endif  // KEDL_SRC_KM_RECORDS_HPP
