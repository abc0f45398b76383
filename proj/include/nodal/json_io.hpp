#pragma once

#include "nodal/bounds.hpp"
#include "nodal/comb_type.hpp"
#include "nodal/eigensolver.hpp"
#include "nodal/laws.hpp"
#include "nodal/nodal_extract.hpp"
#include "nodal/nodal_graph.hpp"
#include "nodal/partition.hpp"
#include "nodal/prescribe.hpp"
#include "nodal/ray_fit.hpp"

#include "json.hpp"

#include <string>

namespace nodal {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

// Readers throw MalformedInput on schema violations, including a wrong formatVersion.
Json read_json_file(const std::string& path);
void check_format_version(const Json& j);

Json to_json(const SurfaceSpec& s);
SurfaceSpec surface_from_json(const Json& j);

Json to_json(const EmbeddedPartition& p);
EmbeddedPartition partition_from_json(const Json& j);

Json to_json(const PartitionStats& s);
Json to_json(const EulerReport& r);
Json to_json(const ParityReport& r);
Json to_json(const MultigraphCounts& c);

Json to_json(const InteriorType& t, IndexBase base = IndexBase::Zero);
Json to_json(const BoundaryType& t);
Json to_json(const DomainLabeling& d);
Json to_json(const BoundaryWords& w);
Json to_json(const RotatingLimitReport& r);
Json to_json(const BoundSet& b);

Json to_json(const EigenProblem& p);
EigenProblem problem_from_json(const Json& j);

// Solutions embed their problem so that the grid can be rebuilt on load.
Json solution_to_json(const EigenProblem& p, const EigenSolution& s, bool withVectors = true);
struct StoredSolution {
  EigenProblem problem;
  EigenSolution solution;
};
StoredSolution solution_from_json(const Json& j);
std::string solution_csv(const EigenSolution& s);

Json to_json(const NodalExtract& e, bool withPartition = true);
Json to_json(const LawReport& r);
Json to_json(const RayFit& f);
Json to_json(const PrescribeResult& r);

// Portable grid text: "nodalgrid 1", then "nx ny x0 y0 h", then ny rows of nx values (bottom row first).
std::string grid_to_text(const GridField& f);

} // namespace nodal
