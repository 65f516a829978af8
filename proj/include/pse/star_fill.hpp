#pragma once

#include "pse/drawing_types.hpp"
#include "pse/schnyder.hpp"

namespace pse {

/// Fills the interior of star-shaped regions of a partially drawn maximal
/// plane graph. Each region is bounded by a drawn cycle (counterclockwise,
/// interior on the left, chord-free) whose inside is internally
/// triangulated. One interior vertex at a time - the apex of the region's
/// first boundary edge - is placed strictly inside a convex under-estimate
/// of the region's kernel; its fan splits the region and the estimate is
/// narrowed by the two new halfplanes, which keeps every sub-region
/// star-shaped.
class StarFiller {
public:
    StarFiller(const PlaneGraph& g, std::vector<Pt>& coords, std::vector<char>& drawn)
        : g_(g), atlas_(g), coords_(coords), drawn_(drawn), face_seen_(atlas_.faces.size(), 0),
          cyc_pos_(g.n, -1), cyc_stamp_(g.n, 0) {}

    /// Fill everything strictly inside `cycle`. The cycle vertices must be
    /// drawn; throws NotStarShaped when the drawn polygon has no
    /// full-dimensional kernel and BoundaryChord when an inside edge joins
    /// two non-consecutive cycle vertices.
    void fill_region(const std::vector<int>& cycle) {
        std::vector<Pt> poly = polygon_of(cycle);
        auto kernel = polygon_kernel(poly);
        require(kernel.size() >= 3 && polygon_area2(kernel) > 0, Err::NotStarShaped,
                "boundary polygon is not star-shaped");
        check_chordless(cycle);
        fill(cycle, kernel);
    }

private:
    const PlaneGraph& g_;
    FaceAtlas atlas_;
    std::vector<Pt>& coords_;
    std::vector<char>& drawn_;
    std::vector<int> face_seen_;
    std::vector<int> cyc_pos_, cyc_stamp_;
    int fepoch_ = 0, cepoch_ = 0;

    std::vector<Pt> polygon_of(const std::vector<int>& cycle) const {
        std::vector<Pt> poly;
        poly.reserve(cycle.size());
        for (int v : cycle) poly.push_back(coords_[v]);
        return poly;
    }

    /// Faces strictly inside the cycle (flood from the face left of the
    /// first cycle edge, never crossing cycle edges).
    std::vector<int> faces_inside(const std::vector<int>& cycle) {
        ++fepoch_;
        std::set<Edge> block;
        int m = static_cast<int>(cycle.size());
        for (int i = 0; i < m; ++i) block.insert(ekey(cycle[i], cycle[(i + 1) % m]));
        int seed = atlas_.face_of.at({cycle[0], cycle[1]});
        std::vector<int> out, stack = {seed};
        face_seen_[seed] = fepoch_;
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            out.push_back(f);
            const auto& walk = atlas_.faces[f];
            int fm = static_cast<int>(walk.size());
            for (int i = 0; i < fm; ++i) {
                int a = walk[i], b = walk[(i + 1) % fm];
                if (block.count(ekey(a, b))) continue;
                int o = atlas_.face_of.at({b, a});
                if (face_seen_[o] != fepoch_) {
                    face_seen_[o] = fepoch_;
                    stack.push_back(o);
                }
            }
        }
        return out;
    }

    void check_chordless(const std::vector<int>& cycle) {
        auto inside = faces_inside(cycle);
        stamp_cycle(cycle);
        int m = static_cast<int>(cycle.size());
        for (int f : inside) {
            int fm = static_cast<int>(atlas_.faces[f].size());
            for (int i = 0; i < fm; ++i) {
                int pa = pos_of(atlas_.faces[f][i]), pb = pos_of(atlas_.faces[f][(i + 1) % fm]);
                if (pa < 0 || pb < 0) continue;
                int d = std::abs(pa - pb);
                if (d != 1 && d != m - 1)
                    fail(Err::BoundaryChord, "edge joins non-consecutive boundary vertices inside the region");
            }
        }
    }

    void stamp_cycle(const std::vector<int>& cycle) {
        ++cepoch_;
        for (int i = 0; i < static_cast<int>(cycle.size()); ++i) {
            cyc_stamp_[cycle[i]] = cepoch_;
            cyc_pos_[cycle[i]] = i;
        }
    }

    int pos_of(int v) const { return cyc_stamp_[v] == cepoch_ ? cyc_pos_[v] : -1; }

    /// A point strictly inside `est` whose fan segments towards z's cycle
    /// neighbors pass through no other cycle vertex.
    Pt place_apex(const std::vector<Pt>& est, int z, const std::vector<int>& cycle) {
        std::vector<int> nbrs;
        for (int w : g_.rot[z])
            if (pos_in(cycle, w)) nbrs.push_back(w);
        auto clean = [&](const Pt& p) {
            for (int v : cycle)
                if (coords_[v] == p) return false;
            for (int w : nbrs)
                for (int y : cycle) {
                    if (y == w) continue;
                    if (on_segment_open(coords_[y], p, coords_[w])) return false;
                }
            return true;
        };
        Pt cand = snap_inside_convex(est);
        if (clean(cand)) return cand;
        Pt centroid = convex_centroid(est);
        if (clean(centroid)) return centroid;
        for (const auto& v : est) {
            Pt mix{(centroid.x * 3 + v.x) / 4, (centroid.y * 3 + v.y) / 4};
            if (clean(mix)) return mix;
        }
        fail(Err::Internal, "could not find a non-degenerate apex placement");
    }

    bool pos_in(const std::vector<int>& cycle, int v) const { return pos_of(v) >= 0; }

    void fill(const std::vector<int>& cycle, std::vector<Pt> est) {
        auto inside_faces = faces_inside(cycle);
        stamp_cycle(cycle);
        bool any_inside = false;
        for (int f : inside_faces) {
            for (int v : atlas_.faces[f])
                if (pos_of(v) < 0) any_inside = true;
        }
        if (!any_inside) {
            require(cycle.size() == 3, Err::Internal, "empty region with a non-triangular boundary");
            return;
        }
        require(polygon_area2(est) > 0, Err::NotStarShaped, "kernel estimate collapsed");

        // Apex of the first boundary edge: the third vertex of the face on
        // its inner side.
        int seed = atlas_.face_of.at({cycle[0], cycle[1]});
        int z = -1;
        for (int v : atlas_.faces[seed])
            if (v != cycle[0] && v != cycle[1]) z = v;
        require(z >= 0 && pos_of(z) < 0 && !drawn_[z], Err::Internal, "apex is not an interior vertex");

        coords_[z] = place_apex(est, z, cycle);
        drawn_[z] = 1;

        // Fan split: z's cycle neighbors in cycle order bound the subregions.
        std::vector<int> nbr_pos;
        for (int w : g_.rot[z])
            if (pos_of(w) >= 0) nbr_pos.push_back(pos_of(w));
        std::sort(nbr_pos.begin(), nbr_pos.end());
        int m = static_cast<int>(cycle.size());
        int p = static_cast<int>(nbr_pos.size());
        require(p >= 2, Err::Internal, "apex has fewer than two boundary neighbors");
        std::vector<std::vector<int>> subs;
        for (int i = 0; i < p; ++i) {
            int a = nbr_pos[i], b = nbr_pos[(i + 1) % p];
            std::vector<int> sub = {z};
            for (int t = a; t != b; t = (t + 1) % m) sub.push_back(cycle[t]);
            sub.push_back(cycle[b]);
            if (sub.size() >= 3) subs.push_back(std::move(sub));
        }
        for (auto& sub : subs) {
            // Sub-estimate: clip by the two fan halfplanes; the wedge at the
            // apex keeps it full-dimensional.
            auto sest = clip_halfplane(est, coords_[sub[0]], coords_[sub[1]]);
            if (!sest.empty()) sest = clip_halfplane(sest, coords_[sub.back()], coords_[sub[0]]);
            require(sest.size() >= 3 && polygon_area2(sest) > 0, Err::NotStarShaped,
                    "sub-region kernel estimate vanished");
            fill(sub, std::move(sest));
        }
    }
};

/// Standalone completion of a partial drawing: every undrawn vertex lies
/// strictly inside a face of the drawn induced subgraph; each such region is
/// filled in place.
inline void complete_drawing(const PlaneGraph& g, std::vector<Pt>& coords, std::vector<char>& drawn) {
    std::vector<int> dlist;
    for (int v = 0; v < g.n; ++v)
        if (drawn[v]) dlist.push_back(v);
    if (static_cast<int>(dlist.size()) == g.n) return;
    auto sf = induced_with_faces(g, dlist);
    StarFiller filler(g, coords, drawn);
    for (int hf = 0; hf < static_cast<int>(sf.hfaces.size()); ++hf) {
        if (hf == sf.outer_hface) {
            require(sf.inside[hf].empty(), Err::Internal, "vertices outside the drawn boundary");
            continue;
        }
        if (sf.inside[hf].empty()) continue;
        std::vector<int> cycle;
        for (int hv : sf.hfaces[hf]) cycle.push_back(sf.h2g[hv]);
        filler.fill_region(cycle);
    }
    for (int v = 0; v < g.n; ++v) require(drawn[v], Err::Internal, "completion left an undrawn vertex");
}

/// Straight-line extension of a star-shaped boundary drawing to the whole
/// graph (boundary untouched; with a triangulated interior every internal
/// face is a triangle, hence convex). gc's outer face walk and
/// boundary_coords must align index-by-index.
inline std::vector<Pt> extend_star_shaped(const PlaneGraph& gc, const std::vector<Pt>& boundary_coords) {
    require(boundary_coords.size() == gc.outer.size(), Err::BadInput, "boundary size mismatch");
    std::vector<Pt> coords(gc.n);
    std::vector<char> drawn(gc.n, 0);
    for (size_t i = 0; i < gc.outer.size(); ++i) {
        coords[gc.outer[i]] = boundary_coords[i];
        drawn[gc.outer[i]] = 1;
    }
    // The stored outer walk runs clockwise when drawn; the fill wants the
    // interior-on-the-left orientation.
    std::vector<int> cycle(gc.outer.rbegin(), gc.outer.rend());
    std::vector<Pt> poly;
    for (int v : cycle) poly.push_back(coords[v]);
    require(polygon_area2(poly) > 0, Err::BadInput, "boundary drawing disagrees with the stored orientation");
    StarFiller filler(gc, coords, drawn);
    filler.fill_region(cycle);
    for (int v = 0; v < gc.n; ++v) require(drawn[v], Err::Internal, "extension left an undrawn vertex");
    return coords;
}

}  // namespace pse
