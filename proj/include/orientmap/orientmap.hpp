#pragma once

#include "orientmap/chords.hpp"
#include "orientmap/error.hpp"
#include "orientmap/mapping.hpp"
#include "orientmap/membership.hpp"
#include "orientmap/report.hpp"
#include "orientmap/seq.hpp"
#include "orientmap/verification.hpp"
#include "orientmap/witnesses.hpp"
