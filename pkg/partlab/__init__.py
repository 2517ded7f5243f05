# -*- coding: utf8 -*-
########################################################################################
# This file is part of partlab.                                                        #
# Full BSD 3-Clause license available in the LICENSE file at the repository root.     #
########################################################################################

__version__ = "0.1.0.dev"


def environment_ready(app):
    # Defer importing configs until sphinx is running.
    from . import configs
    from . import deploy
    # First, verify all of the configurations.
    configs.apply_sphinx_configurations(app)
    # Then write the value tables before Sphinx reads any sources.
    deploy.explode()


def setup(app):
    app.add_config_value("partlab_args", {}, "env")

    app.connect("builder-inited", environment_ready)

    return {
        "version": __version__,
        # Tables are generated *BEFORE* any reading or writing occurs.
        "parallel_read_safe": True,
        "parallel_write_safe": True
    }
