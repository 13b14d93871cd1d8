#pragma once

#include "cubiso/case_table.hpp"
#include "cubiso/classify.hpp"
#include "cubiso/core.hpp"
#include "cubiso/io.hpp"
#include "cubiso/isolate.hpp"
#include "cubiso/landmarks.hpp"
#include "cubiso/provenance.hpp"
#include "cubiso/sturm.hpp"
#include "cubiso/sweep.hpp"
