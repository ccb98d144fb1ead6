#pragma once

#include "ezheeg/harness.hpp"
#include "ezheeg/kubota_leopoldt.hpp"

#include <string>

namespace ezheeg {

std::string fg_report_text(const FGCrosscheck& fg);
std::string fg_report_json(const FGCrosscheck& fg);

std::string hypothesis_report_json(const HypothesisReport& hr);

std::string pgz_report_text(const PgzValue& v, const std::string& curve, long disc);
std::string pgz_report_json(const PgzValue& v, const std::string& curve, long disc);

// 0: all pass; 1: a verified identity failed; 2: preconditions failed
int exit_code_for(bool preconditions_ok, bool all_pass);

} // namespace ezheeg
