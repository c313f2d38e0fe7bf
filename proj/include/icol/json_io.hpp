#pragma once

#include <string>

#include <json.hpp>

#include "icol/certificates.hpp"
#include "icol/colouring.hpp"
#include "icol/decompose.hpp"
#include "icol/generators.hpp"
#include "icol/graph.hpp"

namespace icol {

// Insertion-ordered JSON so emitted documents are bit-stable.
using Json = nlohmann::ordered_json;

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json colouring_to_json(const EdgeColouring& c);
EdgeColouring colouring_from_json(const Json& j);

Json solve_result_to_json(const SolveResult& r);
const char* solve_status_name(SolveStatus s);

Json certificate_to_json(const NonColourabilityCertificate& cert);
NonColourabilityCertificate certificate_from_json(const Json& j);

Json decomposition_to_json(const Decomposition& d);
Json thickness_to_json(const ThicknessResult& t);

Json bounds_report_to_json(const TBoundsReport& r);
Json star_report_to_json(const StarPropertyReport& r);

// FNV-1a 64-bit over raw bytes, rendered as "fnv1a:<16 hex digits>".
std::string fingerprint_bytes(const std::string& bytes);

}  // namespace icol
