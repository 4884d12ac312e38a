#pragma once

#define RHCODEC_VERSION "0.1.0"
