"""Config file for the gauss_analogue launcher

This module contains config settings for all commands of the launcher
in the format of easydict dictionaries.


Already contains the following configs:

Global:
    - field order cap, float cross-check mode, worker threads, output format

Grids:
    - parameter ranges per sum family for the `grid` command

Tables:
    - behaviour of the `tables` command
"""

import os

from easydict import EasyDict as edict


#region GLOBAL DEFAULT CONFIGS
config = edict()

config.max_field_order = 2000
config.float_check = True
config.float_tolerance = 1e-6
config.float_mode = 'double'  # 'double' (numpy) or 'mpmath'
config.mp_dps = 50
config.threads = int(os.environ.get('GAUSS_ANALOGUE_THREADS', 1))
config.log_level = 'INFO'
config.format = 'text'
config.output = None
#endregion


#region GRID CONFIGS
grid = edict()

#region CHARACTER SINE / COSINE FAMILIES
grid.S1Odd = edict(k=[7, 11, 19, 23], a=[1, 3], b=[2, 4, 6])
grid.S1Even = edict(k=[5, 13, 17], a=[0, 1, 2, 3, 4], b=[2, 4, 6])
grid.S2 = edict(k=[5, 13, 17, 29])
grid.S3 = edict(k=[13, 17, 29, 37])
grid.CosRatio = edict(k=[5, 13], a=[1, 3, 5], b=[1, 3, 5])
grid.CosPower = edict(k=[5, 13, 17], a=[1, 3, 5])
grid.SinCot = edict(k=[5, 13], b=[2, 4, 6, 8])
grid.CosSq = edict(k=[5, 13, 17])
grid.CharOnly = edict(k=[5, 13, 17])
grid.TripleSine = edict({'k': [13, 17, 29], 'a': [0, 1, 2], 'd': [1, 3, 5], 'J': [0, 1, 2]})
grid.S4 = edict({'k': [7, 11], 'b': [1, 3, 5], 'd': [1, 3, 5]})
grid.S5 = edict(k=[7, 11, 19], b=[1, 3, 5])
grid.S6 = edict({'k': [7, 11], 'a': [0, 1, 2], 'b': [0, 2, 4], 'd': [1, 3, 5]})
grid.S7 = edict(k=[7, 11], a=[2, 4], b=[1, 3, 5])
grid.Cot = edict(k=[7, 11, 19, 23])
#endregion

#region CHARACTER-FREE FAMILIES
grid.S8 = edict(k=[3, 5, 7, 9, 11], a=[1, 2, 3, 4, 5, 6, 7], b=[2, 3, 4])
grid.S9 = edict(k=[3, 5, 7, 9, 11], a=[1, 2, 3, 4, 5, 6, 7], b=[3])
grid.Ident1 = edict(k=[7])
grid.Ident2 = edict(k=[7])
#endregion

#region GENERAL PRODUCT FAMILIES
grid.GeneralEven = edict({'k': [5, 13], 'max_L': 2, 'b': [1, 2, 3, 4, 5], 'c': [1, 2, 3], 'max_J': 2, 'd': [1, 2, 3, 4, 5], 'a': [0, 1, 2]})
grid.GeneralOdd = edict({'k': [7, 11], 'max_L': 2, 'b': [1, 2, 3, 4, 5], 'c': [1, 2, 3], 'max_J': 2, 'd': [1, 2, 3, 4, 5], 'a': [0, 1, 2]})
#endregion

#endregion


#region TABLES CONFIGS
tables = edict()

tables.fail_on_suspected_erratum = False  # known errata are always reported, never fatal
#endregion


#region DEFAULT CONFIGS
default = edict()

default.command = 'verify'
default.format = 'text'
default.float_check = config.float_check
default.max_field_order = config.max_field_order
default.threads = config.threads
default.log_level = config.log_level
#endregion


def generate_config(command, overrides):
    """
    Merges the command's section and the command-line overrides into `config`
    """
    if command == 'grid':
        config.grid = grid
    if command == 'tables':
        for key, value in tables.items():
            config[key] = value
    for key, value in overrides.items():
        config[key] = value
    config.command = command
