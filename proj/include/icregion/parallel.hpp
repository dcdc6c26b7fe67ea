// Copyright 2026 The icregion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace icregion {

/// Execution policy for the data-parallel kernels. Every kernel has a plain
/// serial loop kept as the reference implementation; the OpenMP variant
/// writes results by cell index, so both produce bit-identical output.
enum class Exec { Serial, Parallel };

}  // namespace icregion
