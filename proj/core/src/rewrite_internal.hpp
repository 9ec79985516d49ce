#pragma once

#include "medial/decomposition.hpp"
#include "union_find.hpp"

namespace medial::detail {

/// Sheet merges performed while rewriting; the surviving id is always the
/// smaller one, which is also the union-find root.
struct RewriteContext {
  UnionFind sheet_alias;
};

MedialComplex unglue_from(MedialComplex c, int p, RewriteContext& ctx);
MedialComplex cut_essential(MedialComplex c, const FinRecord& f, RewriteContext& ctx, CutInfo& info);
MedialComplex contract_inessential(MedialComplex c, const FinRecord& f, RewriteContext& ctx);

/// Glue away a Y-edge that is covered exactly twice.
void smooth_edge(MedialComplex& c, int edge, RewriteContext& ctx);

/// Remove bare vertices, fuse arcs meeting at a bare vertex, suppress
/// Y-valence-2 vertices and turn lone loop arcs into edge curves.
void normalize(MedialComplex& c);

}  // namespace medial::detail
