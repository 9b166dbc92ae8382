from ._phynes import (
    check,
    check_formulas,
    generate,
    psnr,
    read_pfm,
    render_stage1,
    scale_align,
    ssim,
    write_pfm,
)

__all__ = [
    "check",
    "check_formulas",
    "generate",
    "psnr",
    "read_pfm",
    "render_stage1",
    "scale_align",
    "ssim",
    "write_pfm",
]
