#ifndef GLIE_SERIALIZE_HPP
#define GLIE_SERIALIZE_HPP

#include "json.hpp"

#include "glie/algebra.hpp"
#include "glie/graph.hpp"
#include "glie/prolongation.hpp"
#include "glie/rigidity.hpp"

namespace glie {

// JSON schemas of the command-line reports. Field order is fixed and
// rationals are strings in lowest terms ("p/q" or "p").

using Json = nlohmann::ordered_json;

Json to_json(const RationalVector& v);
Json to_json(const ValidationReport& report);
Json parse_error_json(const GraphError& error);

/// {generators, labels, brackets:[{i, j, l, sign}]}: nonzero B^l_{ij} with i < j.
Json structure_json(const TwoStepAlgebra& alg);

Json to_json(const CorankOneCertificate& cert);
Json to_json(const RigidityVerdict& verdict);
Json to_json(const TwoStepAlgebra& alg, const CenterInfo& info);

/// {levels, terminated, total_dim_if_finite, negative_dims[, bases]}.
Json to_json(const TwoStepAlgebra& alg, const ProlongationResult& result, bool emit_bases);

}  // namespace glie

#endif
