#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mislab/chains.hpp"

namespace mislab {

struct VsCaps {
    long max_cuts = 0;          // 0 means 10 * n^2
    bool record_checks = false; // also log every accepted per-vertex check
};

struct VsEvent {
    int layer = 0;
    int vertex = -1;  // seed vertex of the antichain search
    Bitset antichain;
    bool cut_applied = false;
    int initiating_size = 0;  // of the layer subgraph after this step
};

struct VsTrace {
    std::vector<VsEvent> events;
    int restart_count = 0;
    long cut_count = 0;
    long deficit_events = 0;

    std::vector<std::string> to_lines() const;
};

class SaturationCapExceeded : public std::runtime_error {
public:
    explicit SaturationCapExceeded(VsTrace trace)
        : std::runtime_error("saturation cut cap exceeded"), trace_(std::move(trace)) {}
    const VsTrace& trace() const { return trace_; }

private:
    VsTrace trace_;
};

// Induced sub-digraph on the vertices of rank >= k; its initiating set is
// exactly layer k.
OrientedDag layer_subdigraph(const OrientedDag& d, int k);

struct SaturationCheck {
    bool saturated = true;
    int vertex = -1;  // seed whose antichain failed
    Bitset witness;   // the failing antichain
};

// A digraph is saturated with respect to its initiating set when every
// per-vertex maximum antichain that exists is a maximal independent set
// of the base restricted to the digraph's vertices and has the initiating
// set's cardinality.
SaturationCheck is_saturated(const OrientedDag& d);

// Every layer-induced sub-digraph is saturated.
bool is_vertex_saturated(const OrientedDag& d);

struct SaturateResult {
    OrientedDag dag;
    VsTrace trace;
};

// Iterates over the layers, testing saturation of each layer-induced
// sub-digraph; a failing antichain is completed to a maximal independent
// set and cut off, and the reoriented subgraph is spliced back. A pass
// that applied any cut forces a fresh pass from layer 0. Throws
// SaturationCapExceeded (carrying the trace) when the cut budget runs out.
SaturateResult saturate(const OrientedDag& d, const VsCaps& caps = {});

struct HallViolation {
    int layer = 0;
    Bitset antichain;
    int predecessor_count = 0;
};

// For each layer k and each antichain U drawn from the subgraph's
// non-initiating vertices, checks that U has at least |U| predecessors
// inside layer k. Exhaustive when the subgraph has at most
// `exhaustive_limit` non-initiating vertices, sampled otherwise.
std::optional<HallViolation> hall_check(const OrientedDag& d, const TransitiveClosure& tc,
                                        int exhaustive_limit = 16, int samples = 2000,
                                        uint64_t sample_seed = 1);

// An essential-cells-only minimum chain partition exists: its chain count
// matches the closure's maximum antichain size and every chain starts in
// the initiating set.
bool essential_mcp_exists(const OrientedDag& d);

}  // namespace mislab
