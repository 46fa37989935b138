#pragma once

#include "exlarge/finset.hpp"
#include "exlarge/largesets.hpp"
#include "exlarge/pairing.hpp"
#include "exlarge/program.hpp"
#include "exlarge/oracle.hpp"
#include "exlarge/machine.hpp"
#include "exlarge/curated.hpp"
#include "exlarge/jump.hpp"
#include "exlarge/coloring.hpp"
#include "exlarge/verify.hpp"
#include "exlarge/tower.hpp"
#include "exlarge/capture.hpp"
#include "exlarge/hardness.hpp"
#include "exlarge/regressive.hpp"
#include "exlarge/witness.hpp"
#include "exlarge/brute.hpp"
#include "exlarge/erdos_rado.hpp"
#include "exlarge/extract.hpp"
#include "exlarge/min_homog.hpp"
#include "exlarge/decoders.hpp"
