#pragma once

// Serialization of partitions: a plain document model that round-trips
// through JSON, a human-readable table in the same (a : b : c) list style,
// and combinatorial OFF facet lists.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "xpoly/partition.hpp"

namespace xpoly {

struct ComponentSummary {
    std::string classification;
    int euler_characteristic = 0;
    std::optional<bool> orientable;
    int boundary_components = 0;
    std::vector<int> boundary_cycle_lengths;
    std::optional<int> genus;
    bool pseudomanifold = false;
    bool closed = false;
    bool links_ok = false;
    int vertices = 0;
    int edges = 0;
    int triangles = 0;

    friend bool operator==(const ComponentSummary&, const ComponentSummary&) = default;
};

struct BlockSummary {
    std::vector<std::string> cycles; // "(a : b : c)" notation
    long long triangles = 0;
    std::vector<ComponentSummary> components;
    bool shift_invariant = false;
    bool vertex_set_full = false;
    bool vertex_transitive = false;
    int symmetry_order = 0;

    friend bool operator==(const BlockSummary&, const BlockSummary&) = default;
};

struct PartitionDocument {
    std::string skeleton; // "cross" or "simplex"
    int k = 0;
    int modulus = 0;
    std::string labeling;
    std::string tool;
    std::string version;
    std::vector<BlockSummary> blocks;
    long long total_triangles = 0;
    std::map<std::string, int> blocks_by_class; // "Mixed" when components disagree

    friend bool operator==(const PartitionDocument&, const PartitionDocument&) = default;
};

PartitionDocument document_from(const Partition& partition);

/// Canonical JSON encoding; byte-identical across runs for equal documents.
std::string to_json(const PartitionDocument& doc);

/// Inverse of to_json.  Throws ParseError on malformed input.
PartitionDocument document_from_json(const std::string& text);

/// Human-readable listing: one block per paragraph, cycles in
/// (a : b : c) notation.
std::string to_table(const PartitionDocument& doc);

/// One OFF facet list per block (no coordinates, vertices are residues).
std::vector<std::string> off_documents(const Partition& partition);

/// A skeleton plus block list recovered from either a full partition
/// document or a bare {"skeleton", "k", "blocks"} object.
struct ParsedPartitionInput {
    SkeletonSpec spec;
    std::vector<std::vector<DifferenceCycle>> blocks;
};

ParsedPartitionInput parse_partition_input(const std::string& text);

} // namespace xpoly
