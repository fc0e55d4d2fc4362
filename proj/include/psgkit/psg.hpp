// psgkit/psg.hpp - program-derived semantics graph construction
#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "psgkit/graph.hpp"
#include "psgkit/ontology.hpp"
#include "psgkit/parse_tree.hpp"

namespace psgkit
{

/// Concept id -> number of source constructs it stands for.
using ConceptCounts = std::map<std::string, std::size_t>;

/// Classifies every production (and literal token class) into exactly one
/// syntactic-level concept. Identifier and literal text never survives.
/// Throws UnmappedCategory when a construct has no mapping entry.
ConceptCounts classify_syntax(const ParseTree & tree, const PslOntology & o);

/// Names of functions whose own body contains a call naming them.
std::set<std::string> detect_recursion(const ParseTree & tree);

/// Counts of each structural pattern ("self-call", "self-update") in `tree`.
/// self-update: an assignment whose right-hand side reads its own target.
std::map<std::string, std::size_t> detect_patterns(const ParseTree & tree);

/// Nodes: syntactic-level instantiations plus the minimum closure of their
/// mapped concepts and any triggered pattern concepts. One node per concept;
/// `occurrences` sums the constructs whose closure reaches the concept.
/// Nodes are ordered by level, then by ontology declaration order. Minimum
/// and potential edges are instantiated only between present nodes.
Psg build_psg(const ParseTree & tree, const PslOntology & o);

/// Structural invariants of a built PSG against its ontology; empty when all
/// hold. Checks label uniqueness, level agreement, minimum-edge completeness,
/// edge legality, and that exactly one level of nodes is syntactic.
std::vector<std::string> check_psg(const Psg & psg, const PslOntology & o);

}  // namespace psgkit
