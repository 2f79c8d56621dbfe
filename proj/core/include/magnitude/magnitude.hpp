#pragma once

#include "magnitude/core.hpp"
#include "magnitude/descriptor.hpp"
#include "magnitude/element.hpp"
#include "magnitude/embed.hpp"
#include "magnitude/error.hpp"
#include "magnitude/hom.hpp"
#include "magnitude/interval.hpp"
#include "magnitude/laws.hpp"
#include "magnitude/nat.hpp"
#include "magnitude/power.hpp"
#include "magnitude/ratio.hpp"
#include "magnitude/rational.hpp"
#include "magnitude/real.hpp"
#include "magnitude/text.hpp"
