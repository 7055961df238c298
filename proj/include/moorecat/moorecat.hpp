#pragma once

#include "moorecat/braiding.hpp"
#include "moorecat/errors.hpp"
#include "moorecat/gmaps.hpp"
#include "moorecat/json_io.hpp"
#include "moorecat/lawcheck.hpp"
#include "moorecat/pspaces.hpp"
#include "moorecat/random.hpp"
#include "moorecat/sampling.hpp"
#include "moorecat/rational.hpp"
#include "moorecat/tensorcalc.hpp"
