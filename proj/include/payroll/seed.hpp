#pragma once

#include "payroll/store.hpp"

namespace payroll {

/// Loads the reference dataset: the lecturer grid from the legacy Data Dosen
/// form and the master rows it references. Master ids that the grid uses but
/// whose contents are unknown are filled with "(unnamed-<table>-<id>)" rows
/// carrying a zero tariff, so the referenced ids land exactly.
///
/// Throws `Error{conflict}` unless the store is empty.
void seed_reference_data(Store& store);

}  // namespace payroll
