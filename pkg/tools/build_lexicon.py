#!/usr/bin/env python3
"""Regenerate src/kex/data/lexicon.tsv from the curated base lists below.

The lexicon maps lowercase surface forms to one of the coarse tags
NOUN / ADJ / OTHER used by the candidate chunker.  Base nouns and verbs
are expanded to their inflected forms with regular spelling rules plus
the irregular tables; conflicts between generated forms are resolved by
the CLASH_OVERRIDES table, then OTHER > NOUN > ADJ precedence (function
words win; a noun reading beats an adjective reading).

Usage: python tools/build_lexicon.py [output.tsv]
"""

import sys
from pathlib import Path

# --------------------------------------------------------------------
# Closed-class and otherwise non-candidate words (tag OTHER).
# --------------------------------------------------------------------

FUNCTION_WORDS = """
a an the this that these those some any each every either neither no
another such same own certain
i me my mine myself we us our ours ourselves you your yours yourself
yourselves he him his himself she her hers herself it its itself they
them their theirs themselves one ones oneself who whom whose which what
whatever whoever whichever something anything nothing everything someone
anyone everyone nobody somebody anybody everybody
and or nor but yet so for if then else when whenever where wherever
while although though because since unless until whether as than
of in on at by with from to into onto upon over under above below
between among through throughout during before after behind beside
besides within without against about around across along toward towards
via per off down up out near despite unlike like amid beyond underneath
is am are was were be been being do does did done doing have has had
having will would shall should can could may might must ought need
dare
not never no nor none cannot
here there now then today yesterday tomorrow ago already still just
once twice again often always usually sometimes rarely seldom never
ever soon later earlier recently currently previously finally initially
eventually immediately frequently generally typically particularly
especially specifically namely mainly mostly largely partly wholly
entirely completely fully quite rather fairly pretty very too also
moreover furthermore however nevertheless nonetheless therefore thus
hence consequently accordingly otherwise instead meanwhile anyway
indeed perhaps maybe possibly probably certainly definitely clearly
obviously apparently likewise similarly conversely alternatively
respectively approximately roughly nearly almost about exactly
precisely merely simply only even both all most more less least fewer
much many few little lot lots plenty enough several various
well better best worse worst far further furthest hard hardly fast
slow slowly quickly rapidly easily effectively efficiently
significantly substantially considerably greatly highly widely
commonly strongly weakly directly indirectly explicitly implicitly
automatically manually together apart alone away back forth forward
backward onwards upwards downwards somewhat somehow anywhere everywhere
nowhere somewhere else yes okay etc et al eg ie vs
first firstly second secondly third thirdly lastly
"""

# Verbs whose base form should stay OTHER even though a suffix rule or
# noun clash might claim them.
VERBS = """
accept access accommodate accompany accomplish achieve acquire adapt
add address adjust adopt affect agree aim allocate allow alter analyze
analyse announce answer appear apply appreciate approach argue arise
arrange arrive ask assess assign assist associate assume attach attain
attempt attend attract avoid base become begin behave believe belong
benefit bring build buy calculate call capture carry categorize cause
change characterize choose cite claim classify clean collect combine
come communicate compare compile complete compute conclude conduct
confirm connect consider consist constitute construct consult consume
contain continue contribute control convert convey correspond cost
count cover create decide decompose decrease dedicate define deliver
demonstrate denote depend depict derive describe design detect
determine develop devise differ differentiate discover discuss
distinguish distribute divide drive eat eliminate embed emerge emphasize
employ enable encode encounter encourage enhance ensure enter establish
estimate evaluate evolve examine exceed exclude execute exhibit exist
expand expect explain exploit explore express extend extract facilitate
fail fall feed feel fetch find finish fit focus follow formulate gain
gather generalize generate get give go grow guarantee handle happen
hear help hold hope identify ignore illustrate imply improve include
incorporate indicate infer influence inform initialize insert integrate
intend introduce investigate involve keep know lead learn leave let
leverage lie live look lose maintain make manage manipulate map matter
mean meet mention merge minimize maximize mitigate modify motivate move
normalize note notice observe obtain occur offer operate optimize
outperform overcome parse participate pay perform persist place play
point populate pose possess precede predict prefer prepare present
preserve prevent proceed produce promote propagate propose prove
provide publish pursue put quantify raise reach read realize receive
recognize recommend reconstruct record reduce refer refine reflect
regard relate rely remain remember remove render replace report
represent require resolve respond restrict result retain retrieve
return reveal review revise rewrite run satisfy say scale see seek seem
select sell send serve set share show simplify simulate sit solve
specify spend split stand start state stay stop strive subsume succeed
suffer suggest summarize supply support suppose surpass surround
survive take talk teach tell tend think tokenize train transform
translate treat try turn understand undergo underlie unify update
utilize validate vary verify visit want watch wish wonder work write
yield
"""

# Irregular verb surface forms (past, participle, and odd spellings the
# regular expander would get wrong).
IRREGULAR_VERB_FORMS = """
arose arisen ate eaten became began begun bought brought built came
chose chosen dealt did done drew drawn drove driven fell fallen felt
found fed gave given went gone got gotten grew grown heard held kept
knew known laid lay lain led left lost made meant met paid proved
proven put ran read said sat saw seen sold sent sought shown showed
spent split spoke spoken stood taught thought told took taken
understood underwent undergone wrote written woke woken wore worn won
drawn beaten arisen swung sung sang rose risen
lying dying tying
"""

# --------------------------------------------------------------------
# Adjectives (tag ADJ).  Stored as-is; common comparatives included.
# --------------------------------------------------------------------

ADJECTIVES = """
able abnormal absolute abstract abundant academic acceptable accessible
accurate acoustic active actual acute adaptive additional additive
adequate adjacent administrative advanced adverse aerial aesthetic
affordable aggregate aggressive agricultural algebraic algorithmic
alternative ambient ambiguous analytical ancient angular annual
anonymous apparent applicable applied appropriate approximate arbitrary
architectural artificial associative asymmetric asymptotic atomic
attractive audio automated automatic autonomous auxiliary available
average aware basic bayesian behavioral beneficial big bilateral binary
biological bitter black blind blue bold brief bright broad busy
capable cardiac careful causal cellular central certain cheap chemical
chief chronic circular civil classic classical clean clear clinical
close coarse cognitive coherent cold collaborative collective colonial
colorful combinatorial comfortable commercial common compact comparable
comparative compatible competitive complementary complete complex
composite comprehensive computational concrete concurrent conditional
confident congressional conscious consecutive conservative considerable
consistent constant constitutional contemporary contextual continuous
conventional convex cooperative corporate correct corresponding
cost-effective countless creative criminal critical crucial crude
cultural cumulative curious current customary daily dangerous dark
dead deep defensive deliberate demographic dense dependent descriptive
desirable detailed deterministic diagnostic different difficult digital
dimensional direct dirty discrete discriminative distant distinct
distinctive distributed diverse divine domestic dominant double dry
dual due dynamic eager early economic economical educational effective
efficient elastic elderly electric electrical electronic elegant
elementary eligible embedded emotional empirical empty enormous entire
environmental equal equivalent essential ethical everyday evident
evolutionary exact excellent exceptional excessive exclusive executive
exhaustive existing expensive experimental explicit exponential express
extensive external extra extreme facial faint fair faithful false
familiar famous fatal favorable favorite feasible federal fellow female
final financial fine finite firm fiscal fixed flat flexible fluid
foreign formal former fossil fractional fragile free frequent fresh
friendly front full functional fundamental funny future fuzzy general
generative generic genetic genuine geographic geometric giant global
gold golden good gradual grand graphical grateful gray great green grey
gross guilty handy happy hard harmful healthy heavy helpful heuristic
hidden hierarchical high historic historical holistic homogeneous
horizontal hostile hot huge human humble hybrid ideal identical
ideological idle immediate immense imperative implicit important
impossible impressive inclusive incremental independent indirect
individual industrial inevitable inexpensive infinite influential
informal informative inherent initial innovative intact integral
intellectual intelligent intense intensive interactive interesting
intermediate internal international intrinsic invariant invasive
inverse iterative joint judicial junior keen key kind large late
lateral latent latter lazy leading legal legislative legitimate lexical
liable liberal light lightweight likely limited linear linguistic
liquid literary little live lively local logical lonely long loose
loud low loyal magnetic main major male malicious mandatory manual
marginal marine massive mathematical mature maximal maximum mean
meaningful mechanical medical medium mental mere metric microbial
mid middle mild military minimal minimum minor mobile moderate modern
modest modular molecular monetary moral multilingual multiple municipal
musical mutual mysterious naive narrow national native natural naval
near nearby neat necessary negative neighboring nervous net neural new
nice noisy nominal nonlinear normal notable novel nuclear null numerical
numerous objective obvious occasional odd offensive official old
ongoing online only open operational opposite optical optimal optional
oral orange ordinary organic original orthogonal other outdoor outer
overall painful parallel parametric partial particular passive past
patient peculiar perfect permanent perpendicular persistent personal
pharmaceutical physical pink plain plausible pleasant polite political
polynomial poor popular portable positive possible potential powerful
practical precise predictive pregnant preliminary premature present
presidential pretty previous primary prime primitive principal prior
private probabilistic probable procedural productive professional
profound prominent promising prone proper proportional prospective
proud proximal psychological public pure purple qualitative
quantitative quick quiet radical random rapid rare rational raw ready
real realistic reasonable recent recursive red redundant regional
regular regulatory relational relative relevant reliable religious
remarkable remote repetitive representative residual resistant
respective responsible restrictive retail rich rigid rigorous robust
rough round routine royal rural sad safe salient scalable scarce
scientific seasonal secondary secure selective semantic senior sensible
sensitive separate sequential serial serious severe shallow sharp short
sick significant silent silver similar simple simultaneous single
singular skeptical slight slow small smart smooth social soft solar
sole solid sophisticated sound spare sparse spatial special specific
spectral spontaneous sporadic stable standard static stationary
statistical steady steep sticky stiff still stochastic straight
straightforward strange strategic strict structural stupid subjective
subsequent substantial subtle successful successive sufficient suitable
sunny superior supervised supplementary supreme sure surgical surprising
sustainable sweet symbolic symmetric synthetic systematic systemic tall
technical technological temporal temporary tender tentative terminal
terrible tertiary textual theoretical thermal thick thin thorough tight
tiny tolerant top total tough toxic traditional transparent tremendous
trivial tropical true typical ultimate unable uncertain underlying
unexpected unfair uniform unique universal unknown unlabeled unlikely
unnecessary unpleasant unsupervised unusual upper urban urgent useful
useless usual vacant vague valid valuable variable various vast verbal
vertical viable vibrant violent virtual visible visual vital vocal
volatile vulnerable warm weak wealthy weird wet white whole wide wild
willing wise wooden wrong yellow young
larger smaller higher lower greater fewer lesser older newer earlier
later deeper wider stronger weaker simpler closer nearer bigger longer
shorter faster slower easier harder richer poorer broader narrower
cheaper denser sparser coarser finer smoother rougher
largest smallest highest lowest greatest oldest newest earliest latest
deepest widest strongest weakest simplest closest nearest biggest
longest shortest fastest slowest easiest hardest richest
"""

# --------------------------------------------------------------------
# Nouns (tag NOUN).  Base forms; plural generated unless listed in
# NOUNS_FIXED (irregular, mass, or already plural).
# --------------------------------------------------------------------

NOUNS = """
ability absence abstraction abuse access accident account accuracy
achievement acid acquisition act action activation activity actor
adaptation addition address adjustment administration adoption adult
analysis
advance advantage advertisement advice affair age agency agenda agent
agreement agriculture aid aircraft airline airport alarm album
algorithm alignment allocation alternative ambiguity amount analogy
analyst anchor angle animal annotation anomaly answer antenna
anthropology apartment appearance application approach approximation
architecture archive area argument arm army arrangement array arrival
art article artifact artist aspect assembly assertion assessment asset
assignment association assumption astronomy athlete atmosphere atom
attack attempt attention attitude attribute auction audience audio
author authority automation autumn availability average award awareness
axis baby back background bacterium bag balance ball band bandwidth
bank bar barrier base baseline basin basis batch battery battle beach
beam bean bear beauty bed bedroom bee beer beginning behavior belief
bell belt benchmark benefit bias bicycle bid bill bin binding biology
bird birth bit block blood board boat body bond bone book boost border
boss bottle bottleneck bottom boundary bound bowl box boy brain branch
brand bread breakdown breakfast breast breath brick bridge broadcast
brother budget buffer bug building bulk bullet bunch burden bus
business butter button cabin cabinet cable cache cake calculation
calendar calibration camera camp campaign campus cancer candidate
capability capacity capital captain car carbon card care career cargo
case cash cat catalog category cattle cause ceiling cell census center
centre century ceremony certificate chain chair challenge chamber
championship chance change channel chapter character characteristic
characterization charge chart check chemical chemistry chest chicken
chief child chip choice church circle circuit circulation circumstance
citation city civilization claim class classification classifier
clause client climate clinic clock closure cloth cloud club cluster
clustering coach coal coalition coast code coefficient coffee cognition
coin collaboration collapse colleague collection college collision
color column combination comment commerce commission commitment
committee commodity communication community company comparison
compensation competition competitor complement complexity compliance
component composition compound compression computation computer concept
concentration concern concert conclusion condition conference
confidence configuration conflict congress conjunction connection
consensus consent consequence consideration consistency constant
constraint construction consumer consumption contact container content
contest context continent contract contradiction contrast contribution
convention convergence conversation conversion cooperation coordinate
coordination copy copyright core corn corner corpus correction
correlation correspondence corridor cost cotton council counter
counterpart country county couple courage course court cousin coverage
cow crash creation creativity creature credit crew crime crisis
criterion critic criticism crop cross crowd crystal cue culture cup
currency curriculum curve customer cycle dairy damage dance data
database dataset date daughter dawn day deal dealer death debate debt
decade decision deck decline decoder decomposition decrease deduction
defect defense deficit definition degradation degree delay delegate
deletion delivery demand democracy demonstration density department
departure dependence dependency deployment deposit depression depth
derivation derivative descent description descriptor desert design
designer desire desk detail detection detector developer development
deviation device diagnosis diagram dialogue diameter dictionary diet
difference difficulty diffusion dimension dinner direction director
directory disagreement disaster discipline discount discourse discovery
discrepancy discretization discrimination discussion disease disk
disorder dispersion displacement display dispute distance distinction
distortion distribution district divergence diversity dividend division
doctor doctrine document documentation dog dollar domain door dose
doubt draft drama dream dress drink driver drop drought drug duration
dust duty dynamics ear earth earthquake ease east economy edge
edition editor education effect effectiveness efficiency effort egg
election electricity electrode electron element elephant elite email
embedding emergence emergency emission emotion emphasis empire employee
employer employment encoder encoding encounter end enemy energy engine
engineer engineering enhancement enterprise entertainment enthusiasm
entity entrance entropy entry environment enzyme episode equation
equilibrium equipment equity era error escape essay essence estate
estimate estimation ethanol evaluation evening event evidence evolution
exam examination example exception exchange excitement exclusion
excuse execution exercise exhibition existence expansion expectation
expenditure expense experience experiment expert expertise explanation
exploration explosion exponent export exposure expression extension
extent extraction eye face facility fact factor factory faculty failure
fair faith fall family fan farm farmer fashion fat fate father fault
feature fee feedback feeling fence festival fever fiber fiction field
fig fight figure file film filter finance finding finger fire firm
fish fisherman fit fitness flag flavor fleet flexibility flight flood
floor flow flower fluctuation fluid flux fly focus fog fold folder
food foot football force forecast forest forestry fork form formation
format formula formulation fortune forum foundation fox fraction
fragment frame framework fraud freedom frequency friend friendship
front frontier fruit fuel function functionality fund furniture fusion
future gain galaxy gallery game gap garden gas gate gateway gender gene
generalization generation generator genome gentleman genre gesture
giant gift girl glance glass goal goat gold golf goods government
governor grade gradient grain grammar grant graph grass gravity group
growth guard guess guest guidance guide guideline guitar gun guy habit
habitat hair half hall hand handful handle harbor hardware harm
harmony harvest hat head header health heart heat heating height
heir helicopter hell hemisphere herb heritage hero heuristic hierarchy
highway hill hint hip history hit hobby hole holiday home homework
honey honor hope horizon hormone horse hospital host hotel hour house
household housing hub human humidity humor hunger hunter hurricane
husband hut hybrid hydrogen hypothesis ice icon idea identification
identifier identity ideology image imagination imbalance immigrant
immigration impact implementation implication import importance
impression improvement impulse incentive incidence incident income
increase increment independence index indication indicator individual
industry inequality infection inference inflation influence info
information infrastructure ingredient inhabitant inhibition initiative
injection injury innovation input inquiry insect insertion insight
inspection inspiration instability installation instance institute
institution instruction instrument insurance intake integer
integration integrity intelligence intensity intent intention
interaction intercept interest interface interference interior
internet interpolation interpretation interval intervention interview
introduction intrusion intuition invasion invention inventory
investigation investment investor invitation ion iron island isolation
issue item iteration jacket jail job joint joke journal journalist
journey judge judgment juice jump junction jury justice
justification kernel keyboard keyword kid kidney kind kingdom kitchen
knee knife knot knowledge lab label labor laboratory lack ladder lady
lake lamp land landing landscape lane language laptop laser latency
launch law lawyer layer layout lead leader leadership leaf league leap
lecture leg legend legislation lemma lemon length lens lesion lesson
letter level lexicon liability library license life lifetime light
lightning likelihood limb limit limitation line lineup linguistics
link lion lip liquid list listener literature liver load loan lobby
localization location lock log logic loop loss lot love lover luck
lunch lung machine machinery magazine magnitude mail majority maker
male mall man management manager mandate manifold manipulation manner
manual manufacturer manufacturing manuscript map mapping margin marker
market marketing marriage mask mass master match material mathematics
matrix matter maximum mayor meal mean meaning measure measurement meat
mechanism medal media median medication medicine medium meeting member
membership membrane memory mention menu merchant mercy merger merit
mesh message metadata metal metaphor method methodology metric midnight
migration mile milk mill mind mine mineral minimum minister minority
minute miracle mirror missile mission mistake mixture mobility modality
mode model modeling moderator modification module moisture molecule
moment momentum money monitor monitoring monk monkey monopoly monster
month monument mood moon morning mortality mortgage mother motion
motivation motor mountain mouse mouth move movement movie multitude
murder muscle museum music musician mutation mystery myth name
narrative nation nature navigation necessity neck need needle neighbor
neighborhood nerve nest network neuron news newspaper night node noise
norm normalization north nose note notebook notion noun novel
novelty nucleus number nurse nut nutrient oak object objective
obligation observation observer obstacle occasion occupation occurrence
ocean offer office officer official offset oil onset onion operation
operator opinion opponent opportunity opposition optimization option
orbit orchestra order ordering organ organization organism orientation
origin outbreak outcome outlet outlier outline output oven overhead
overlap owner ownership oxygen pace pack package packet page pain
painter painting pair palace palm pan panel panic paper paradigm
paragraph parallel parameter parent park parliament part participant
participation particle partition partner partnership party pass
passage passenger passion password past pasture patch path pathway
patent patient pattern pause payment peace peak peasant pen penalty
pencil pension people pepper percent percentage perception performance
period permission permutation person personality personnel perspective
perturbation pet phase phenomenon philosophy phone photo photograph
phrase physician physics piano picture piece pig pile pilot pin pine
pipe pipeline pitch pixel place plan plane planet planning plant
plasma plate platform play player pleasure plot pocket poem poet
poetry point pointer poison pole police policy politician politics
pollution polynomial pond pool population port portfolio portion
portrait position possibility post poster pot potato potential poultry
poverty powder power practice practitioner precision predecessor
prediction predictor preference prefix pregnancy premise preparation
presence present presentation president press pressure prevalence
prevention price pride priest primitive prince princess principle
print printer priority prison prisoner privacy privilege prize
probability problem procedure process processing processor producer
product production profession professor profile profit program project
projection promise promotion pronoun proof propagation property
prophet proportion proposal proposition prosecution prospect protection
protein protest protocol prototype province provider provision pruning
psychology pub publication publicity publisher pull pulse pump
punishment pupil purchase purpose pursuit push qualification quality
quantity quarter query quest question questionnaire queue quote radar
radiation radio radius rail railroad rain rainfall rally range rank
ranking rat rate rating ratio rationale ray reaction reader reading
reality realization rear reason recall receipt receiver reception
recipe recipient recognition recommendation reconstruction record
recorder recovery recruitment rectangle reduction redundancy reference
refinement reform refugee region register regression regularization
regulation rehabilitation reinforcement rejection relation relationship
release relevance reliability relief religion remainder remark remedy
removal renaissance rent repair repetition replacement replica reply
report reporter repository representation reputation request
requirement rescue research researcher reservation reservoir residence
resident residue resistance resolution resource respect respondent
response responsibility rest restaurant restoration restriction result
retrieval return revenue review revision revolution reward rhetoric
rhythm rice ride rifle right ring risk ritual rival river road robot
robustness rock rocket rod role roof room root rope rotation route
router routine row rule run runner sake salad salary sale salt sample
sampling sanction sand satellite satisfaction sauce saving scale
scanner scenario scene schedule schema scheme scholar scholarship school
science scientist scope score screen script sculpture sea search season
seat second secret secretary section sector security seed segment
segmentation selection self semantics semester seminar senate senator
sensation sense sensitivity sensor sentence sentiment sequence series
server service session setting settlement setup shade shadow shaft
shape share shareholder sheep sheet shelf shell shelter shift ship
shirt shock shoe shop shore shortage shot shoulder show shower side
sight sign signal signature significance silence silk similarity
simulation singer sister site situation size skill skin sky slave
sleep slice slide slope slot smartphone smell smile smoke snake snow
society sociology sock software soil soldier solution solver son song
sort soul sound soup source south space spam span speaker
specification specificity spectrum speech speed spending sphere spirit
sport spot spouse spring square stability stack stadium staff stage
stake stakeholder stance standard star start state statement station
statistic status steam steel stem step stick stimulus stock stomach
stone storage store storm story stranger strategy stream street
strength stress stretch strike string stroke structure struggle student
studio study stuff style subject submission subset subsidy substance
substitution substring suburb success succession successor suffix sugar
suggestion suit summary summer summit sun supplement supplier supply
surface surgeon surgery surplus surprise surveillance survey survival
survivor suspect suspicion sustainability switch symbol symmetry
symptom syndrome synthesis system table tablet tactic tag tail talent
talk tank target task taste tax taxonomy tea teacher teaching team
tear technique technology teen telephone telescope television
temperature template temple tenant tendency tension tensor tent term
terminal termination terminology territory test testament testimony
text textbook texture theater theatre theme theorem theory therapy
thing thought thread threat threshold throat throughput thumb ticket
tide tie tiger timber time timeline timestamp tin tip tissue title
token tolerance tomato ton tone tongue tool tooth top topic topology
tortoise total touch tour tourism tourist tournament tower town toy
trace track tract trade tradition traffic tragedy trail train trainer
training trait trajectory transaction transcript transcription transfer
transformation transformer transition translation translator
transmission transport transportation trap travel traveler treatment
treaty tree trend trial triangle tribe trick trip triumph troop trouble
truck trust truth tube tumor tunnel tuple turn tutor tutorial twin
type uncertainty uncle underground understanding unemployment union
unit universe university upgrade uptake usage user utility utterance
vacation vaccine validation validity valley value valve van variability
variable variance variant variation variety vector vegetable vehicle
vein velocity vendor venture venue verb verdict verification version
vertex vessel veteran victim victory video view viewer viewpoint
village violation violence virus visa vision visit visitor
visualization vitamin vocabulary voice volume volunteer vote voter
voting wage waist wall war warehouse warning warrior waste watch water
wave way weakness wealth weapon weather web website wedding week weekend
weight weighting welfare well west whale wheat wheel whisper widow
width wife wind window wine wing winner winter wire wisdom wish witness
wolf woman wonder wood wool word work worker workflow workload workshop
world worry worth wound wrist writer writing yard year yesterday yield
youth zone
"""

# Surface noun forms stored verbatim (irregular plurals, mass nouns,
# Latin/Greek plurals, and forms whose regular plural is wrong).
NOUNS_FIXED = """
children men women feet teeth mice geese oxen people
analyses bases crises hypotheses theses diagnoses parentheses synopses
criteria phenomena bacteria curricula memoranda millennia spectra
corpora genera stimuli alumni nuclei radii foci fungi syllabi
indices matrices vertices appendices codices
leaves lives knives wives halves shelves wolves selves calves loaves
media data series species means news mathematics physics economics
politics statistics linguistics semantics dynamics genetics
aircraft fish sheep deer cattle
lemmata schemata automata
taxa axes
"""

# --------------------------------------------------------------------
# Ambiguous surface forms where the generated tag should be overridden.
# Mostly verb 3rd-person forms that collide with noun plurals but are
# predominantly verbal in running text.
# --------------------------------------------------------------------

CLASH_OVERRIDES = {
    "uses": "OTHER",
    "needs": "OTHER",
    "shows": "OTHER",
    "makes": "OTHER",
    "takes": "OTHER",
    "gives": "OTHER",
    "finds": "OTHER",
    "provides": "OTHER",
    "includes": "OTHER",
    "requires": "OTHER",
    "presents": "OTHER",
    "describes": "OTHER",
    "means": "OTHER",
    "leads": "OTHER",
    "allows": "OTHER",
    "helps": "OTHER",
    "offers": "OTHER",
    "holds": "OTHER",
    "plays": "OTHER",
    "runs": "OTHER",
    "claims": "OTHER",
    "suggests": "OTHER",
    "reports": "OTHER",
    "aims": "OTHER",
    "works": "OTHER",
    "calls": "OTHER",
    # noun/adjective or noun/verb clashes resolved toward the reading
    # that dominates in article text
    "work": "NOUN",
    "study": "NOUN",
    "studies": "NOUN",
    "approach": "NOUN",
    "approaches": "NOUN",
    "result": "NOUN",
    "results": "NOUN",
    "increase": "NOUN",
    "decrease": "NOUN",
    "measure": "NOUN",
    "measures": "NOUN",
    "model": "NOUN",
    "models": "NOUN",
    "method": "NOUN",
    "methods": "NOUN",
    "process": "NOUN",
    "processes": "NOUN",
    "need": "NOUN",
    "use": "NOUN",
    "change": "NOUN",
    "changes": "NOUN",
    "control": "NOUN",
    "controls": "NOUN",
    "design": "NOUN",
    "designs": "NOUN",
    "search": "NOUN",
    "set": "NOUN",
    "sets": "NOUN",
    "present": "ADJ",
    "novel": "ADJ",
}

_VOWELS = "aeiou"

# -o nouns that take plain +s; -f nouns that do not take -ves
_O_PLAIN_PLURAL = {
    "photo", "piano", "memo", "auto", "logo", "kilo", "info", "demo",
    "video", "studio", "radio", "zoo", "portfolio", "scenario", "ratio",
}
_F_PLAIN_PLURAL = {"roof", "belief", "chief", "proof", "brief", "grief"}


def pluralize(noun):
    if noun.endswith("is"):
        return noun[:-2] + "es"
    if noun.endswith("y") and len(noun) > 1 and noun[-2] not in _VOWELS:
        return noun[:-1] + "ies"
    if noun.endswith("o") and len(noun) > 1 and noun[-2] not in _VOWELS:
        return noun + ("s" if noun in _O_PLAIN_PLURAL else "es")
    if noun.endswith(("s", "x", "z", "ch", "sh")):
        return noun + "es"
    if noun.endswith("fe"):
        return noun[:-2] + "ves"
    if noun.endswith("ff") or noun in _F_PLAIN_PLURAL:
        return noun + "s"
    if noun.endswith("f"):
        return noun[:-1] + "ves"
    if noun.endswith("man"):
        return noun[:-3] + "men"
    return noun + "s"


def verb_forms(verb):
    """Regular -s / -ed / -ing expansions of a base verb."""
    forms = {verb}
    if verb.endswith("y") and len(verb) > 1 and verb[-2] not in _VOWELS:
        forms.add(verb[:-1] + "ies")
        forms.add(verb[:-1] + "ied")
        forms.add(verb + "ing")
    elif verb.endswith("e") and not verb.endswith("ee"):
        forms.add(verb + "s")
        forms.add(verb + "d")
        forms.add(verb[:-1] + "ing")
    else:
        if verb.endswith(("s", "x", "z", "ch", "sh", "o")):
            forms.add(verb + "es")
        else:
            forms.add(verb + "s")
        if _doubles_final(verb):
            forms.add(verb + verb[-1] + "ed")
            forms.add(verb + verb[-1] + "ing")
        else:
            forms.add(verb + "ed")
            forms.add(verb + "ing")
    return forms


_DOUBLING = {
    "stop", "plan", "occur", "refer", "prefer", "submit", "permit",
    "omit", "commit", "control", "fit", "map", "drop", "wrap", "trap",
    "split", "embed", "begin", "run", "set", "put", "get", "spam",
    "tag", "plug", "scan", "skip", "grab", "swap", "trim", "ship",
    "chat", "slip", "stir", "equip",
}


def _doubles_final(verb):
    return verb in _DOUBLING


def build():
    lexicon = {}

    def put(word, tag, priority):
        # higher priority wins; ties keep the earlier entry
        word = word.strip().lower()
        if not word:
            return
        cur = lexicon.get(word)
        if cur is None or priority > cur[1]:
            lexicon[word] = (tag, priority)

    # noun readings beat verb readings on surface collisions (recall
    # matters more than precision for candidate chunking); function
    # words beat everything except the explicit overrides
    for w in ADJECTIVES.split():
        put(w, "ADJ", 1)
    for w in VERBS.split():
        for form in verb_forms(w):
            put(form, "OTHER", 2)
    for w in IRREGULAR_VERB_FORMS.split():
        put(w, "OTHER", 2)
    for w in NOUNS.split():
        put(w, "NOUN", 3)
        put(pluralize(w), "NOUN", 3)
    for w in NOUNS_FIXED.split():
        put(w, "NOUN", 3)
    for w in FUNCTION_WORDS.split():
        put(w, "OTHER", 4)
    for word, tag in CLASH_OVERRIDES.items():
        put(word, tag, 5)

    return {w: tag for w, (tag, _) in lexicon.items()}


def main():
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else (
        Path(__file__).resolve().parent.parent / "src" / "kex" / "data" / "lexicon.tsv"
    )
    lexicon = build()
    lines = [f"{w}\t{t}" for w, t in sorted(lexicon.items())]
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")
    counts = {}
    for t in lexicon.values():
        counts[t] = counts.get(t, 0) + 1
    print(f"wrote {len(lines)} entries to {out} ({counts})")


if __name__ == "__main__":
    main()
