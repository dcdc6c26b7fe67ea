// Copyright 2026 The icregion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "icregion/errors.hpp"

namespace icregion {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::PowerOutOfRange: return "PowerOutOfRange";
        case Errc::WrongDimension: return "WrongDimension";
        case Errc::DegenerateChannel: return "DegenerateChannel";
        case Errc::OutOfDomain: return "OutOfDomain";
        case Errc::NoInterference: return "NoInterference";
        case Errc::Infeasible: return "Infeasible";
        case Errc::CapExceeded: return "CapExceeded";
        case Errc::SimplexViolation: return "SimplexViolation";
        case Errc::OutsideHull: return "OutsideHull";
        case Errc::ZeroDirection: return "ZeroDirection";
        case Errc::BadInput: return "BadInput";
    }
    return "UnknownError";
}

}  // namespace icregion
