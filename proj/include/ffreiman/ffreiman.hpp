#pragma once

// Umbrella header: the whole library plus the command layer.

#include "acceptance.hpp"
#include "commands.hpp"
#include "report.hpp"
