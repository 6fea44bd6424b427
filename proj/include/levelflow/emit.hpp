#ifndef LEVELFLOW_EMIT_HPP
#define LEVELFLOW_EMIT_HPP

#include <string>
#include <vector>

#include "levelflow/exceptional.hpp"
#include "levelflow/hellmann_feynman.hpp"
#include "levelflow/spectral_flow.hpp"

namespace levelflow {

/// %.17g rendering; all CSV numbers go through this so identical inputs
/// produce byte-identical files.
std::string fmt_g17(double x);

/// Branch-ordered sweep table: provenance comment, then
/// lambda,E_0,...,E_{dim-1}.
std::string flow_csv(const FlowResult& flow, const std::string& provenance);

/// One JSON object per event, one per line.
std::string events_json(const std::vector<CrossingEvent>& events);

std::string reports_jsonl(const std::vector<IdentityReport>& reports);

std::string ep_json(const ExceptionalPoint& ep);

/// g,phase,reE_0,imE_0,... per grid point.
std::string pt_csv(const PTSweepResult& result, const std::string& provenance);
std::string pt_boundaries_json(const PTSweepResult& result);

/// x,y,reE_0,imE_0,...; x-blocks separated by blank lines for plotting.
std::string surface_csv(const SurfaceGrid& grid, const std::string& provenance);

}  // namespace levelflow

#endif
