// psgkit/spt.hpp - Aroma-style simplified parse trees
#pragma once

#include <string_view>

#include "psgkit/graph.hpp"
#include "psgkit/parse_tree.hpp"

namespace psgkit
{

enum class PlaceholderMode {
  coarse,  // every elided token becomes "#"
  fine,    // identifiers "#VAR", literals "#LIT", type names "#TYPE"
};

std::string_view to_string(PlaceholderMode mode);

struct SptOptions
{
  PlaceholderMode placeholders = PlaceholderMode::fine;
  /// Emit `( ) { } , ;` as leaf nodes. They always appear in parent labels.
  bool delimiter_leaves = false;
};

/// Label given to a production with no items (empty parameter list or
/// empty translation unit).
inline constexpr std::string_view kEmptyProductionLabel = "#EMPTY";

/// One internal node per production, one leaf per retained token.
/// identifier-expression and literal-expression collapse to a single
/// placeholder leaf. Internal labels join child summaries with single
/// spaces: keyword, operator and punctuation tokens contribute their text,
/// everything else contributes "%". Nodes are numbered in pre-order.
Spt build_spt(const ParseTree & tree, const SptOptions & options = {});

}  // namespace psgkit
