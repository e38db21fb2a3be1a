def _distribution_frame(distributions, columns=None, header=None):
    """
    Generate a DataFrame from the value distributions of an
    equidistribution report.

    Parameters
    ----------
    distributions : dict(int: dict(str: Counter))
        For each index j, the number of objects of each class taking each
        value of the statistic of index j.
    columns : sequence, optional
        Classes to keep, among "block", "lr" and "outdeg".
    header : list(str) or dict(str: str), optional
        Column names. A list replaces the names of all kept classes and must
        be as long as them; a dict renames some of them, in the form
        {'<current_name>': '<new_name>'}.

    Returns
    -------
    pandas.DataFrame
        Indexed by (j, value), one integer column per class, zero where a
        class never takes the value.
    """
    import pandas as pd

    records = []
    for j, dist in sorted(distributions.items()):
        values = sorted(set().union(*dist.values()))
        for value in values:
            record = {"j": j, "value": value}
            record.update({name: dist[name][value] for name in dist})
            records.append(record)

    df = pd.DataFrame.from_records(records)
    if records:
        df = df.set_index(["j", "value"]).sort_index()

    if columns is not None:
        df = df.loc[:, list(columns)]

    if header is not None:
        if isinstance(header, (tuple, list, pd.Index)):
            try:
                df.columns = header
            except ValueError:
                raise ValueError(
                    "If specifying column names with a sequence, the number "
                    "of names must exactly match the number of columns."
                )
        elif isinstance(header, dict):
            df = df.rename(columns=header)
    return df
