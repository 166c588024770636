// rtl - robotics template library for geometry and point cloud processing
// SPDX-License-Identifier: MIT
//
// Umbrella header pulling in the whole library.

#ifndef RTL_RTL_HPP
#define RTL_RTL_HPP

#include "rtl/core/bounding_box.hpp"
#include "rtl/core/frustum.hpp"
#include "rtl/core/line_segment.hpp"
#include "rtl/core/matrix.hpp"
#include "rtl/core/polygon.hpp"
#include "rtl/core/quaternion.hpp"
#include "rtl/core/vector.hpp"

#include "rtl/transform/apply.hpp"
#include "rtl/transform/general_tf.hpp"
#include "rtl/transform/rigid_tf.hpp"
#include "rtl/transform/rotation.hpp"
#include "rtl/transform/tf_tree.hpp"
#include "rtl/transform/translation.hpp"

#include "rtl/segmentation/segmentation.hpp"

#include "rtl/vectorization/benchmark.hpp"
#include "rtl/vectorization/ftls.hpp"
#include "rtl/vectorization/prefix_moments.hpp"
#include "rtl/vectorization/shapes.hpp"
#include "rtl/vectorization/simplify.hpp"
#include "rtl/vectorization/sym_eigen.hpp"
#include "rtl/vectorization/tls_fit.hpp"

#include "rtl/latex/document.hpp"
#include "rtl/latex/figure2d.hpp"
#include "rtl/latex/scene3d.hpp"
#include "rtl/latex/style.hpp"
#include "rtl/latex/table.hpp"

#include "rtl/meta/random.hpp"
#include "rtl/meta/registry.hpp"
#include "rtl/meta/traits.hpp"

#include "rtl/io/ingest.hpp"
#include "rtl/io/pipeline.hpp"

#endif  // RTL_RTL_HPP
