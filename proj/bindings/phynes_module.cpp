#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "phynes/image.hpp"
#include "phynes/metrics.hpp"
#include "phynes/selfcheck.hpp"
#include "phynes/synthetic.hpp"
#include "phynes/train.hpp"

namespace py = pybind11;
using namespace phynes;

namespace {

Image image_from_array(py::array_t<double, py::array::c_style | py::array::forcecast> arr) {
  if (arr.ndim() != 3 || arr.shape(2) != 3)
    throw py::value_error("expected an (H, W, 3) array");
  Image img;
  img.height = int(arr.shape(0));
  img.width = int(arr.shape(1));
  img.pixels.resize(size_t(img.width) * img.height);
  auto a = arr.unchecked<3>();
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x) img.at(x, y) = {a(y, x, 0), a(y, x, 1), a(y, x, 2)};
  return img;
}

py::array_t<double> array_from_image(const Image& img) {
  py::array_t<double> arr({img.height, img.width, 3});
  auto a = arr.mutable_unchecked<3>();
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x) {
      const Vec3& p = img.pixels[size_t(y) * img.width + x];
      a(y, x, 0) = p.x;
      a(y, x, 1) = p.y;
      a(y, x, 2) = p.z;
    }
  return arr;
}

}  // namespace

PYBIND11_MODULE(_phynes, m) {
  m.doc() = "neural explicit-surface rendering and relighting engine";

  m.def("generate", [](const std::string& preset, uint64_t seed, const std::string& out) {
    Dataset ds = generate_synthetic(seed, preset, out);
    return ds.frames.size();
  }, py::arg("preset"), py::arg("seed"), py::arg("out"),
     "Render a synthetic dataset; returns the frame count.");

  m.def("read_pfm", [](const std::string& path) { return array_from_image(read_pfm(path)); });
  m.def("write_pfm", [](py::array arr, const std::string& path) {
    write_pfm(image_from_array(arr), path);
  });

  m.def("psnr", [](py::array a, py::array b, double peak) {
    return psnr(image_from_array(a), image_from_array(b), peak);
  }, py::arg("a"), py::arg("b"), py::arg("peak") = 1.0);
  m.def("ssim", [](py::array a, py::array b) {
    return ssim(image_from_array(a), image_from_array(b));
  });
  m.def("scale_align", [](py::array pred, py::array gt) {
    ScaleAlignResult r = scale_align(image_from_array(pred), image_from_array(gt));
    return py::make_tuple(py::make_tuple(r.factors.x, r.factors.y, r.factors.z),
                          array_from_image(r.aligned));
  });

  m.def("check", [](uint64_t seed) {
    py::list out;
    for (const CheckResult& r : run_all_checks(seed))
      out.append(py::make_tuple(r.name, r.passed, r.worst));
    return out;
  }, py::arg("seed") = 7, "Run the formula/gradient/oracle/physics suites.");
  m.def("check_formulas", [](uint64_t seed) {
    py::list out;
    for (const CheckResult& r : run_formula_suite(seed))
      out.append(py::make_tuple(r.name, r.passed, r.worst));
    return out;
  }, py::arg("seed") = 7);

  m.def("render_stage1", [](const std::string& checkpoint, const std::string& dataset_dir,
                            int frame) {
    LoadedCheckpoint ckpt = load_full_checkpoint(checkpoint);
    if (!ckpt.geo || !ckpt.dtx) throw py::value_error("checkpoint lacks stage-1 maps");
    Dataset ds = load_dataset(dataset_dir);
    if (frame < 0 || size_t(frame) >= ds.frames.size()) throw py::value_error("bad frame index");
    BodyModel body = load_body(dataset_dir + "/gt/body.json");
    Stage1Scene scene = Stage1Scene::build(body, ds.frames[frame].pose);
    scene.density_cfg = ckpt.density;
    scene.background = ds.background;
    return array_from_image(
        render_stage1_image(scene, *ckpt.geo, *ckpt.dtx, ds.frames[frame].camera));
  }, py::arg("checkpoint"), py::arg("dataset"), py::arg("frame") = 0,
     "Volumetric render of one dataset view from a stage-1 checkpoint.");
}
