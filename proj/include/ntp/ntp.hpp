#ifndef NTP_NTP_HPP
#define NTP_NTP_HPP

#include "ntp/analysis.hpp"
#include "ntp/catalog.hpp"
#include "ntp/element_table.hpp"
#include "ntp/group.hpp"
#include "ntp/group_file.hpp"
#include "ntp/nonf_graph.hpp"
#include "ntp/number_theory.hpp"
#include "ntp/permutation.hpp"
#include "ntp/stabilizer_chain.hpp"

#endif  // NTP_NTP_HPP
