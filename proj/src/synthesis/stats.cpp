// Copyright 2026 The ecsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iomanip>
#include <sstream>

#include "ecsynth/synthesis/synth.hpp"

namespace ecsynth {

std::string format_stats(const Graph& g, const SynthResult& res,
                         const CertificateReport* report, bool include_timing) {
  std::ostringstream out;
  out << "n=" << g.order() << '\n';
  out << "edges=" << g.edge_count() << '\n';
  out << "ancillas=" << res.trace.ancillas << '\n';
  out << "cost=" << res.cost << '\n';
  out << "strategy=" << res.strategy << '\n';
  out << "max_set_size=" << res.max_set_size << '\n';
  const Bounds& b = res.bounds;
  out << "rankwidth=" << (b.rankwidth ? std::to_string(*b.rankwidth) : "unknown") << '\n';
  out << "rankwidth_exact=" << (b.rankwidth_exact ? "true" : "false") << '\n';
  out << "lower_bound=" << (b.lower ? std::to_string(*b.lower) : "none") << '\n';
  out << "upper_rankwidth=" << (b.upper_rankwidth ? b.upper_rankwidth->to_string() : "none")
      << '\n';
  out << "upper_generic=" << b.upper_generic.to_string() << '\n';
  if (report) {
    out << "replay=" << (report->replay_ok ? "ok" : "mismatch") << '\n';
    out << "lower_check=" << (!report->lower_checked ? "skipped" : (report->lower_ok ? "ok" : "violated"))
        << '\n';
    out << "certified=" << (report->ok() ? "true" : "false") << '\n';
  }
  if (include_timing) {
    out << std::fixed << std::setprecision(6) << "wall_seconds=" << res.wall_seconds << '\n';
  }
  return out.str();
}

}  // namespace ecsynth
