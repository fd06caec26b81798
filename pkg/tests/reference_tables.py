"""Reference values for designs from (120,8)-arcs in the known planes of order 16.

KNOWN_DESIGNS: (hyperoval id, plane label, 2-rank, parallel classes, resolutions).
RANK_FREQUENCIES: 2-rank -> number of designs.
"""

KNOWN_DESIGNS = [
    ('1', 'PG(2,16)', 65, 153, 18),
    ('2', 'PG(2,16)', 65, 221, 137),
    ('1', 'SEMI2', 81, 153, 18),
    ('2', 'SEMI2', 81, 153, 18),
    ('3', 'SEMI2', 81, 153, 18),
    ('4', 'SEMI2', 81, 153, 18),
    ('5', 'SEMI2', 81, 153, 18),
    ('6', 'SEMI2', 80, 153, 18),
    ('7', 'SEMI2', 81, 153, 18),
    ('8', 'SEMI2', 80, 153, 18),
    ('9', 'SEMI2', 81, 153, 18),
    ('10', 'SEMI2', 80, 153, 18),
    ('11', 'SEMI2', 81, 153, 18),
    ('12', 'SEMI2', 81, 153, 18),
    ('13', 'SEMI2', 80, 153, 18),
    ('14', 'SEMI2', 81, 153, 18),
    ('15', 'SEMI2', 81, 153, 18),
    ('16', 'SEMI2', 81, 157, 18),
    ('17', 'SEMI2', 80, 157, 18),
    ('1', 'SEMI4', 81, 153, 18),
    ('2', 'SEMI4', 81, 153, 18),
    ('3', 'SEMI4', 81, 153, 18),
    ('1', 'HALL', 80, 153, 18),
    ('2', 'HALL', 81, 157, 18),
    ('3', 'HALL', 80, 157, 18),
    ('4', 'HALL', 80, 173, 18),
    ('1', 'HALL.d', 81, 153, 18),
    ('2', 'HALL.d', 81, 153, 18),
    ('3', 'HALL.d', 81, 153, 18),
    ('1', 'LMRH', 83, 153, 18),
    ('2', 'LMRH', 86, 153, 18),
    ('3', 'LMRH', 86, 153, 18),
    ('4', 'LMRH', 86, 153, 18),
    ('5', 'LMRH', 86, 157, 18),
    ('6', 'LMRH', 82, 153, 18),
    ('1', 'LMRH.d', 89, 153, 18),
    ('1', 'JOWK', 82, 153, 18),
    ('2', 'JOWK', 82, 153, 18),
    ('3', 'JOWK', 83, 153, 18),
    ('4', 'JOWK', 82, 153, 18),
    ('5', 'JOWK', 82, 157, 18),
    ('6', 'JOWK', 82, 153, 18),
    ('1', 'JOWK.d', 83, 153, 18),
    ('1', 'DSFP', 86, 153, 18),
    ('2', 'DSFP', 86, 153, 18),
    ('3', 'DSFP', 86, 153, 18),
    ('4', 'DSFP', 86, 153, 18),
    ('5', 'DSFP', 86, 153, 18),
    ('6', 'DSFP', 86, 153, 18),
    ('7', 'DSFP', 86, 153, 18),
    ('8', 'DSFP', 86, 153, 18),
    ('9', 'DSFP', 86, 153, 18),
    ('10', 'DSFP', 86, 153, 18),
    ('11', 'DSFP', 86, 153, 18),
    ('12', 'DSFP', 86, 153, 18),
    ('13', 'DSFP', 86, 153, 18),
    ('14', 'DSFP', 86, 157, 18),
    ('15', 'DSFP', 86, 153, 18),
    ('16', 'DSFP', 85, 153, 18),
    ('17', 'DSFP', 86, 153, 18),
    ('18', 'DSFP', 86, 153, 18),
    ('19', 'DSFP', 86, 153, 18),
    ('20', 'DSFP', 86, 153, 18),
    ('21', 'DSFP', 86, 153, 18),
    ('22', 'DSFP', 86, 157, 18),
    ('1', 'DEMP', 85, 153, 18),
    ('2', 'DEMP', 84, 153, 18),
    ('3', 'DEMP', 85, 153, 18),
    ('4', 'DEMP', 85, 153, 18),
    ('5', 'DEMP', 83, 153, 18),
    ('6', 'DEMP', 85, 153, 18),
    ('7', 'DEMP', 84, 153, 18),
    ('8', 'DEMP', 85, 153, 18),
    ('9', 'DEMP', 84, 153, 18),
    ('10', 'DEMP', 85, 153, 18),
    ('11', 'DEMP', 84, 153, 18),
    ('12', 'DEMP', 83, 157, 18),
    ('13', 'DEMP', 83, 157, 18),
    ('1', 'DEMP.d', 85, 153, 18),
    ('2', 'DEMP.d', 85, 153, 18),
    ('1', 'JOHN', 94, 157, 18),
    ('1', 'BBS4', 94, 157, 18),
    ('1', 'BBH2', 94, 153, 18),
    ('2', 'BBH2', 94, 153, 18),
    ('1', 'MATH', 90, 153, 18),
    ('1', 'MATH.d', 91, 153, 18),
    ('2', 'MATH.d', 91, 153, 18),
    ('3', 'MATH.d', 92, 153, 18),
    ('1', 'BBH1', 90, 153, 18),
    ('2', 'BBH1', 92, 153, 18),
    ('3', 'BBH1', 90, 157, 18),
]

RANK_FREQUENCIES = {65: 2, 80: 8, 81: 19, 82: 6, 83: 7, 84: 4, 85: 10, 86: 25, 89: 1, 90: 3, 91: 2, 92: 2, 94: 4}

KNOWN_BY_KEY = {(plane, hid): (rank, classes, res) for hid, plane, rank, classes, res in KNOWN_DESIGNS}
