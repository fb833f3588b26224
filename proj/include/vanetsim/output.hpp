#pragma once

#include <cstddef>
#include <ostream>
#include <span>
#include <string>

#include "vanetsim/engine.hpp"

namespace vanetsim {

// Writes the merged packet/sample time series as CSV with a fixed header:
//   time_s,kind,rx_power_w,snr_db,ber,bit_errors,accepted,throughput_bps
// Rows are ordered by time (samples before packets on exact ties), numbers
// carry 12 significant digits in locale-independent form, cells that do not
// apply to a row kind stay empty, and identical series yield byte-identical
// output. Returns the number of data rows.
std::size_t emit_csv(const StatsSeries& series, std::ostream& out);

// Per-stage pipeline trace rows (packet_id,stage,value,unit); empty unless
// the run had tracing enabled.
std::size_t emit_trace_csv(const StatsSeries& series, std::ostream& out);

// Human-readable run summary: totals, the worst packet, zero-throughput
// windows.
std::string emit_summary(const ScenarioConfig& config, const StatsSeries& series);

// Ranking summary for an antenna comparison (fewest bit errors first).
std::string emit_comparison_summary(const ScenarioConfig& config,
                                    std::span<const ComparisonResult> results,
                                    std::uint64_t seed);

// 12-significant-digit, locale-independent rendering used by the CSV writer.
std::string format_number(double v);

}  // namespace vanetsim
